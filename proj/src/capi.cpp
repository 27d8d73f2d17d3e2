#include "sumfree/sumfree_c.h"

#include <cstring>
#include <string>

#include "sumfree/harness.hpp"
#include "sumfree/solvers.hpp"

using namespace sumfree;

struct sf_group {
    GroupSpec g;
};
struct sf_set {
    GroupSet s;
};

namespace {

thread_local std::string g_last_error;

sf_status status_of(const Error& e) {
    switch (e.kind) {
        case Error::Parse: return SF_ERR_PARSE;
        case Error::Invalid: return SF_ERR_INVALID;
        case Error::Capped: return SF_ERR_CAPPED;
        case Error::Unsupported: return SF_ERR_UNSUPPORTED;
    }
    return SF_ERR_INTERNAL;
}

template <typename Fn>
sf_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return SF_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return SF_ERR_NOMEM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SF_ERR_INTERNAL;
    }
}

SolverBudget budget_from(const sf_budget* b) {
    SolverBudget out;
    if (b) {
        if (b->node_limit > 0) out.node_limit = b->node_limit;
        out.time_limit_seconds = b->time_limit_seconds;
    }
    return out;
}

sf_status run_solver(WitnessedValue (*solve)(const Ambient&,
                                             const std::vector<long long>&,
                                             const SolverBudget&),
                     const sf_group* g, const sf_set* a, const sf_budget* budget,
                     sf_solve_info* info, sf_set** witness) {
    return guarded([&] {
        std::vector<long long> elems;
        for (auto e : a->s.elements()) elems.push_back((long long)e);
        WitnessedValue v = solve(Ambient::finite(g->g), elems, budget_from(budget));
        if (info) *info = {v.value, v.optimal ? 1 : 0, v.nodes};
        if (witness) {
            GroupSet w(g->g.order());
            for (auto e : v.witness) w.insert(std::uint64_t(e));
            *witness = new sf_set{std::move(w)};
        }
    });
}

}  // namespace

extern "C" {

const char* sf_version(void) { return kArtifactVersion; }
const char* sf_last_error(void) { return g_last_error.c_str(); }

sf_status sf_group_parse(const char* text, sf_group** out) {
    return guarded([&] {
        if (!text || !out) throw Error(Error::Invalid, "null argument");
        *out = new sf_group{GroupSpec::parse(text)};
    });
}
void sf_group_free(sf_group* g) { delete g; }
uint64_t sf_group_order(const sf_group* g) { return g->g.order(); }
size_t sf_group_num_factors(const sf_group* g) { return g->g.factors().size(); }
uint64_t sf_group_factor(const sf_group* g, size_t i) {
    return i < g->g.factors().size() ? g->g.factors()[i] : 0;
}
sf_status sf_group_add(const sf_group* g, uint64_t x, uint64_t y, uint64_t* out) {
    return guarded([&] { *out = g->g.add(x, y); });
}
sf_status sf_group_neg(const sf_group* g, uint64_t x, uint64_t* out) {
    return guarded([&] { *out = g->g.neg(x); });
}

sf_status sf_set_create(const sf_group* g, const uint64_t* elems, size_t n,
                        sf_set** out) {
    return guarded([&] {
        GroupSet s(g->g.order());
        for (size_t i = 0; i < n; ++i) s.insert(elems[i]);
        *out = new sf_set{std::move(s)};
    });
}
void sf_set_free(sf_set* s) { delete s; }
size_t sf_set_card(const sf_set* s) { return s->s.card(); }
int sf_set_contains(const sf_set* s, uint64_t e) {
    return e < s->s.universe() && s->s.contains(e) ? 1 : 0;
}
sf_status sf_set_elements(const sf_set* s, uint64_t* buf, size_t cap, size_t* out_n) {
    return guarded([&] {
        auto elems = s->s.elements();
        if (out_n) *out_n = elems.size();
        for (size_t i = 0; i < elems.size() && i < cap; ++i) buf[i] = elems[i];
    });
}

sf_status sf_sumset(const sf_group* g, const sf_set* a, const sf_set* b, sf_set** out) {
    return guarded([&] { *out = new sf_set{sumset(g->g, a->s, b->s)}; });
}
sf_status sf_restricted_sumset(const sf_group* g, const sf_set* a, sf_set** out) {
    return guarded([&] { *out = new sf_set{restricted_sumset(g->g, a->s)}; });
}

sf_status sf_phi(const sf_group* g, const sf_set* a, const sf_budget* budget,
                 sf_solve_info* info, sf_set** witness) {
    return run_solver(&phi, g, a, budget, info, witness);
}
sf_status sf_f(const sf_group* g, const sf_set* a, const sf_budget* budget,
               sf_solve_info* info, sf_set** witness) {
    return run_solver(&f_value, g, a, budget, info, witness);
}
sf_status sf_strong_f(const sf_group* g, const sf_set* a, const sf_budget* budget,
                      sf_solve_info* info, sf_set** witness) {
    return run_solver(&strong_f, g, a, budget, info, witness);
}
sf_status sf_max_sum_free(const sf_group* g, const sf_budget* budget,
                          sf_solve_info* info, sf_set** witness) {
    return guarded([&] {
        WitnessedValue v = max_sum_free(g->g, budget_from(budget));
        if (info) *info = {v.value, v.optimal ? 1 : 0, v.nodes};
        if (witness) {
            GroupSet w(g->g.order());
            for (auto e : v.witness) w.insert(std::uint64_t(e));
            *witness = new sf_set{std::move(w)};
        }
    });
}
sf_status sf_zero_sum(const sf_group* g, const sf_set* a, int* found,
                      uint64_t pair[2]) {
    return guarded([&] {
        auto zs = zero_sum_pair(g->g, a->s);
        *found = zs.has_value() ? 1 : 0;
        if (zs && pair) {
            pair[0] = zs->first;
            pair[1] = zs->second;
        }
    });
}

sf_status sf_run_json(const char* request_json, char** report_json) {
    return guarded([&] {
        if (!request_json || !report_json)
            throw Error(Error::Invalid, "null argument");
        Json req = Json::parse(request_json, nullptr, false);
        if (req.is_discarded()) throw Error(Error::Parse, "malformed request JSON");
        Json rep = run_request(req);
        std::string text = rep.dump(2);
        char* buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *report_json = buf;
    });
}
sf_status sf_report_csv(const char* report_json, char** csv) {
    return guarded([&] {
        if (!report_json || !csv) throw Error(Error::Invalid, "null argument");
        Json rep = Json::parse(report_json, nullptr, false);
        if (rep.is_discarded()) throw Error(Error::Parse, "malformed report JSON");
        std::string text = report_to_csv(rep);
        char* buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *csv = buf;
    });
}

void sf_string_free(char* s) { delete[] s; }

}  // extern "C"
