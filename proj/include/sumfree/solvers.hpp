#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sumfree/ambient.hpp"

namespace sumfree {

struct SolverBudget {
    std::uint64_t node_limit = UINT64_MAX;
    double time_limit_seconds = 0.0;  // <= 0 means no time limit
};

// An exact optimum paired with the witness subset achieving it. When a budget
// ran out, `optimal` is false and `value` is only the best-found lower bound.
struct WitnessedValue {
    std::uint64_t value = 0;
    std::vector<long long> witness;  // ascending element values
    bool optimal = true;
    std::uint64_t nodes = 0;
};

// phi(A): largest B subset of A with restricted_sumset(B) disjoint from A.
// Witness is the lexicographically least optimum.
WitnessedValue phi(const Ambient& amb, const std::vector<long long>& A,
                   const SolverBudget& budget = {});

// decision form with early exit; runs to completion (depth <= k+1)
bool phi_at_most(const Ambient& amb, const std::vector<long long>& A, int k);

// f(A): largest B subset of A with (B+B) disjoint from B (doubles included)
WitnessedValue f_value(const Ambient& amb, const std::vector<long long>& A,
                       const SolverBudget& budget = {});

// strong variant: largest B subset of A with (B+B) disjoint from all of A
WitnessedValue strong_f(const Ambient& amb, const std::vector<long long>& A,
                        const SolverBudget& budget = {});

// largest sum-free subset of the whole group
WitnessedValue max_sum_free(const GroupSpec& g, const SolverBudget& budget = {});

// first pair (a, -a) with both ends in A, a ascending; a == -a allowed
std::optional<std::pair<std::uint64_t, std::uint64_t>> zero_sum_pair(
    const GroupSpec& g, const GroupSet& A);

}  // namespace sumfree
