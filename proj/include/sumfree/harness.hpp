#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumfree/ambient.hpp"
#include "sumfree/solvers.hpp"

namespace sumfree {

using Json = nlohmann::ordered_json;

// Set files / inline sets: a JSON array of integers (IntegerLine or
// single-factor groups, reduced mod the order) or of coordinate arrays
// matching the factor list. With strict set, out-of-range values error
// instead of reducing.
std::vector<long long> load_set(const Json& arr, const std::optional<GroupSpec>& g,
                                bool strict = false);

// canonical JSON form of a set: integers, or coordinate arrays for
// multi-factor groups; load_set(set_to_json(s)) == s
Json set_to_json(const std::optional<GroupSpec>& g, const std::vector<long long>& elems);

// Executes one operation described by a request object and returns the
// report. Report envelope: {operation, inputs, verdict, ...}. Usage problems
// throw Error; verification failures are reported via verdict.
Json run_request(const Json& request);

// verdict -> process exit code: ok 0, claim_failed 1, partial 3
int report_exit_code(const Json& report);

// flat CSV rendering; batch reports become one row per entry
std::string report_to_csv(const Json& report);

// reproducibility record for one CLI run; timestamps are excluded from any
// comparison surface
Json make_manifest(const Json& request, const std::vector<std::string>& argv,
                   const std::vector<std::string>& outputs);

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace sumfree
