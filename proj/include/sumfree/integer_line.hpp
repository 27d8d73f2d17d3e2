#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumfree/intset.hpp"
#include "sumfree/rational.hpp"
#include "sumfree/solvers.hpp"

namespace sumfree {

struct SweepResult {
    Rational alpha;       // a maximizing dilation, least such
    IntSet B;             // { a in A : frac(a*alpha) in (1/3, 2/3) }
    std::uint64_t count = 0;
};

// Exact breakpoint sweep of alpha over [0,1): maximizes the number of a in A
// with frac(a*alpha) in the open middle third. The result is sum-free and has
// count >= ceil(|A|/3). Rejects sets containing 0.
SweepResult erdos_third(const IntSet& A);

struct GreedyTrace {
    std::vector<long long> vertices;  // majority-sign elements, ascending, as used
    std::vector<int> degrees;         // degree of each vertex in the sum graph
    std::vector<long long> B;         // sum-avoiding in A (original signs)
    Rational caro_wei;                // sum of 1/(d(v)+1)
    bool negated = false;             // whether A was negated to get a positive majority
};

// Minimum-degree greedy on the graph connecting a_i ~ a_j when a_i + a_j is
// in A; returns B sum-avoiding in A with |B| >= caro_wei.
GreedyTrace turan_greedy(const IntSet& A);

// phi / f with the IntegerLine ambient
WitnessedValue integer_phi(const IntSet& A, const SolverBudget& budget = {});
WitnessedValue integer_f(const IntSet& A, const SolverBudget& budget = {});

struct MinPhiResult {
    std::vector<long long> best_set;
    WitnessedValue phi_value;
    std::uint64_t iterations = 0;
    std::string strategy;
    std::uint64_t seed = 0;
    // (iteration, phi) at each improvement
    std::vector<std::pair<std::uint64_t, std::uint64_t>> trace;
};

// Seeded heuristic exploration of min phi over n-element integer sets.
// Never claims optimality.
MinPhiResult min_phi_search(int n, const std::string& strategy,
                            const SolverBudget& budget, std::uint64_t seed);

}  // namespace sumfree
