#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumfree/group.hpp"
#include "sumfree/solvers.hpp"

namespace sumfree {

enum class ClaimKind {
    PhiEquals,
    PhiAtMost,
    Cardinality,
    ZeroSumFree,
    SumAvoidingSubset,   // `subset` is sum-avoiding in the constructed set
    MeasurePhi,          // record phi, no assertion
    MeasurePhiOutsideSubgroup,  // record phi(A \ subset), no assertion
};

struct Claim {
    ClaimKind kind;
    std::uint64_t expected = 0;
    std::vector<std::uint64_t> subset;  // SumAvoiding / MeasurePhiOutside
};

struct Construction {
    std::string name;
    GroupSpec group;
    GroupSet set;
    std::vector<Claim> claims;
};

struct ClaimResult {
    Claim claim;
    bool holds;
    std::uint64_t measured = 0;
    bool has_measured = false;
};

const char* claim_kind_name(ClaimKind k);

// re-checks each claim with the exact solvers and plain set algebra
std::vector<ClaimResult> verify_claims(const Construction& c,
                                       const SolverBudget& budget = {});

// A = { (4m+1)2^j mod 2^n : m in Z, 0 <= j <= n-2 } in Z/2^n, n >= 4.
// Claims: |A| = 2^(n-1)-1, phi(A) = 4, zero-sum-free, {1,2,5,10} sum-avoiding.
Construction power_of_two_counterexample(int n);

// A = A0 x H in Z/(2^k-1) x H with A0 the powers of 2; 2^k-1 must be prime,
// k >= 3. phi is asserted (=3) only for k = 3, measured otherwise.
Construction mersenne_counterexample(int k, const GroupSpec& H);

// A = union of the given subgroups plus extras; claims phi <= #subs + |extras|
Construction subgroup_union(const GroupSpec& g, const std::vector<Subgroup>& subs,
                            const GroupSet& extras);

// A = H union mask with mask inside the coset x+H and 2x in H; claims
// phi(A) <= 2 and reports phi(A \ H)
Construction coset_trap(const GroupSpec& g, const Subgroup& H, std::uint64_t x,
                        const GroupSet& mask);

}  // namespace sumfree
