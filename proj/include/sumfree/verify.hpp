#pragma once

#include <cstdint>
#include <vector>

#include "sumfree/group.hpp"
#include "sumfree/rational.hpp"
#include "sumfree/solvers.hpp"

namespace sumfree {

// phi(A) = 1 happens exactly in these shapes
struct Phi1Case {
    enum Kind {
        FullSubgroup,         // A = H
        TwoTorsionMinusZero,  // A = H \ {0}, H a 2-torsion subgroup
        Singleton,            // A = {b}
        PairWithZero,         // A = {b, 0}
        SymmetricTriple,      // A = {b, 0, -b}
        NotPhi1,
    } kind = NotPhi1;
    std::uint64_t b = 0;  // the defining element for the three small patterns
};

const char* phi1_kind_name(Phi1Case::Kind k);

// structural tests in the listed order, first match wins
Phi1Case classify_phi1(const GroupSpec& g, const GroupSet& A);

struct Phi1Violation {
    std::vector<std::uint64_t> set;
    bool classified_phi1;
    bool actual_phi1;
};
struct Phi1Report {
    std::uint64_t total = 0;    // nonempty subsets of G
    std::uint64_t checked = 0;
    std::vector<Phi1Violation> violations;
    bool complete = true;
};

// exhaustive check of classify <=> (phi = 1) over all nonempty subsets;
// budget.node_limit caps the number of subsets visited
Phi1Report verify_phi1_equivalence(const GroupSpec& g, const SolverBudget& budget = {});

struct DensityPrediction {
    int case_tag;           // 1, 2 or 3 (theorem cases i / ii / iii)
    Rational h;
    std::uint64_t q_or_m;   // q for case i, 0 for ii, exponent m for iii
};

const char* gr_case_name(int case_tag);  // "i", "ii", "iii"

DensityPrediction gr_density(const GroupSpec& g);

struct GrReport {
    DensityPrediction prediction;
    Rational predicted;     // h * |G|
    WitnessedValue measured;
    bool equal;
};

GrReport verify_gr(const GroupSpec& g, const SolverBudget& budget = {});

struct CoverReport {
    std::vector<Subgroup> cover;  // H_1..H_m, 0 <= m <= k
    GroupSet residual;            // A minus the union of the cover
    Rational c_witness;           // max(|residual|, max_i |H_i|/|A cap H_i|)
    bool exhaustive = false;
    int k = 0;
};

// minimizes c_witness over families of at most k enumerated subgroups; ties
// broken by smaller m, then lexicographic subgroup list
CoverReport cover_search(const GroupSpec& g, const GroupSet& A, int k,
                         const SolverBudget& budget = {});

struct ScanVerdict {
    GroupSpec group;
    int k = 0;
    std::uint64_t min_size = 0;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::vector<std::vector<std::uint64_t>> counterexamples;  // re-verified hits
    std::uint64_t subsets_considered = 0;
    std::uint64_t candidates_checked = 0;  // survived the size + zero-sum filters
    bool complete = true;
};

// hunts for A with phi(A) < k, |A| >= min_size and no zero-sum pair
ScanVerdict scan_erdos_question(const GroupSpec& g, int k, std::uint64_t min_size,
                                const SolverBudget& budget = {},
                                std::uint64_t seed = 0);

struct MinFResult {
    GroupSet minimizer;
    WitnessedValue f;
    bool exhaustive = false;
    std::uint64_t candidates = 0;
};

// min over |A| = n of f(A); exhaustive when (|G| choose n) is small enough
MinFResult min_f_search(const GroupSpec& g, std::uint64_t n,
                        const SolverBudget& budget = {}, std::uint64_t seed = 0);

}  // namespace sumfree
