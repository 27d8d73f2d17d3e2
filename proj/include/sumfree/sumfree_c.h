/* C API for the sumfree shared library. Opaque handles, integer error
 * codes, and a JSON command interface mirroring the CLI subcommands. */
#ifndef SUMFREE_C_H
#define SUMFREE_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sf_status {
    SF_OK = 0,
    SF_ERR_PARSE = 1,       /* malformed text or JSON */
    SF_ERR_INVALID = 2,     /* precondition violated */
    SF_ERR_CAPPED = 3,      /* size or enumeration cap exceeded */
    SF_ERR_UNSUPPORTED = 4, /* operation unavailable in this ambient */
    SF_ERR_NOMEM = 5,
    SF_ERR_INTERNAL = 6,
} sf_status;

typedef struct sf_group sf_group;
typedef struct sf_set sf_set;

const char* sf_version(void);

/* message for the last failing call on this thread; empty string if none */
const char* sf_last_error(void);

/* --- groups --------------------------------------------------------- */

/* grammar: Z<n>(xZ<m>)*, factors >= 2 */
sf_status sf_group_parse(const char* text, sf_group** out);
void sf_group_free(sf_group* g);
uint64_t sf_group_order(const sf_group* g);
size_t sf_group_num_factors(const sf_group* g);
uint64_t sf_group_factor(const sf_group* g, size_t i);
sf_status sf_group_add(const sf_group* g, uint64_t x, uint64_t y, uint64_t* out);
sf_status sf_group_neg(const sf_group* g, uint64_t x, uint64_t* out);

/* --- sets ----------------------------------------------------------- */

sf_status sf_set_create(const sf_group* g, const uint64_t* elems, size_t n,
                        sf_set** out);
void sf_set_free(sf_set* s);
size_t sf_set_card(const sf_set* s);
int sf_set_contains(const sf_set* s, uint64_t e);
/* writes up to cap elements in ascending order; *out_n is the full count */
sf_status sf_set_elements(const sf_set* s, uint64_t* buf, size_t cap, size_t* out_n);

sf_status sf_sumset(const sf_group* g, const sf_set* a, const sf_set* b, sf_set** out);
sf_status sf_restricted_sumset(const sf_group* g, const sf_set* a, sf_set** out);

/* --- exact solvers --------------------------------------------------- */

typedef struct sf_budget {
    uint64_t node_limit;   /* 0 means unlimited */
    double time_limit_seconds; /* <= 0 means unlimited */
} sf_budget;

typedef struct sf_solve_info {
    uint64_t value;
    int optimal;       /* 0 when a budget ran out; value is then a lower bound */
    uint64_t nodes;
} sf_solve_info;

sf_status sf_phi(const sf_group* g, const sf_set* a, const sf_budget* budget,
                 sf_solve_info* info, sf_set** witness);
sf_status sf_f(const sf_group* g, const sf_set* a, const sf_budget* budget,
               sf_solve_info* info, sf_set** witness);
sf_status sf_strong_f(const sf_group* g, const sf_set* a, const sf_budget* budget,
                      sf_solve_info* info, sf_set** witness);
sf_status sf_max_sum_free(const sf_group* g, const sf_budget* budget,
                          sf_solve_info* info, sf_set** witness);
/* *found is 0/1; when found, pair[0] + pair[1] = 0 with both in a */
sf_status sf_zero_sum(const sf_group* g, const sf_set* a, int* found,
                      uint64_t pair[2]);

/* --- JSON command interface ------------------------------------------ */

/* Runs one operation described by a JSON request, e.g.
 *   {"command":"phi","group":"Z7","set":[1,2,4]}
 * and hands back a JSON report. Free the report with sf_string_free. */
sf_status sf_run_json(const char* request_json, char** report_json);

/* flat CSV rendering of a report produced by sf_run_json */
sf_status sf_report_csv(const char* report_json, char** csv);

void sf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SUMFREE_C_H */
