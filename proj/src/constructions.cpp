#include "sumfree/constructions.hpp"

namespace sumfree {
namespace {

std::vector<long long> as_longs(const GroupSet& s) {
    std::vector<long long> v;
    for (auto e : s.elements()) v.push_back((long long)e);
    return v;
}

bool mersenne_prime(int k) {
    if (k < 2) return false;
    std::uint64_t p = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

const char* claim_kind_name(ClaimKind k) {
    switch (k) {
        case ClaimKind::PhiEquals: return "phi_equals";
        case ClaimKind::PhiAtMost: return "phi_at_most";
        case ClaimKind::Cardinality: return "cardinality";
        case ClaimKind::ZeroSumFree: return "zero_sum_free";
        case ClaimKind::SumAvoidingSubset: return "sum_avoiding_subset";
        case ClaimKind::MeasurePhi: return "measure_phi";
        case ClaimKind::MeasurePhiOutsideSubgroup: return "measure_phi_outside_subgroup";
    }
    return "?";
}

std::vector<ClaimResult> verify_claims(const Construction& c,
                                       const SolverBudget& budget) {
    Ambient amb = Ambient::finite(c.group);
    std::vector<ClaimResult> out;
    for (const auto& cl : c.claims) {
        ClaimResult r{cl, false, 0, false};
        switch (cl.kind) {
            case ClaimKind::PhiEquals: {
                auto v = phi(amb, as_longs(c.set), budget);
                r.measured = v.value;
                r.has_measured = true;
                r.holds = v.optimal && v.value == cl.expected;
                break;
            }
            case ClaimKind::PhiAtMost: {
                r.holds = phi_at_most(amb, as_longs(c.set), int(cl.expected));
                break;
            }
            case ClaimKind::Cardinality: {
                r.measured = c.set.card();
                r.has_measured = true;
                r.holds = r.measured == cl.expected;
                break;
            }
            case ClaimKind::ZeroSumFree: {
                auto zs = zero_sum_pair(c.group, c.set);
                r.measured = zs.has_value() ? 1 : 0;
                r.has_measured = true;
                r.holds = !zs.has_value();
                break;
            }
            case ClaimKind::SumAvoidingSubset: {
                GroupSet b = GroupSet::of(c.group.order(), cl.subset);
                r.holds = b.is_subset_of(c.set) &&
                          !restricted_sumset(c.group, b).intersects(c.set);
                break;
            }
            case ClaimKind::MeasurePhi: {
                auto v = phi(amb, as_longs(c.set), budget);
                r.measured = v.value;
                r.has_measured = true;
                r.holds = v.optimal;
                break;
            }
            case ClaimKind::MeasurePhiOutsideSubgroup: {
                GroupSet h = GroupSet::of(c.group.order(), cl.subset);
                auto v = phi(amb, as_longs(set_minus(c.set, h)), budget);
                r.measured = v.value;
                r.has_measured = true;
                r.holds = v.optimal;
                break;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

Construction power_of_two_counterexample(int n) {
    if (n < 4)
        throw Error(Error::Invalid, "power_of_two_counterexample: n must be >= 4");
    if (n > 20)
        throw Error(Error::Capped, "power_of_two_counterexample: n too large");
    std::uint64_t mod = std::uint64_t{1} << n;
    GroupSpec g = GroupSpec::from_factors({mod});
    GroupSet a(mod);
    for (int j = 0; j <= n - 2; ++j)
        for (std::uint64_t m = 0; m < mod; ++m)
            a.insert(((4 * m + 1) << j) % mod);

    Construction c;
    c.name = "power2(n=" + std::to_string(n) + ")";
    c.group = g;
    c.set = a;
    c.claims.push_back({ClaimKind::Cardinality, (std::uint64_t{1} << (n - 1)) - 1, {}});
    c.claims.push_back({ClaimKind::PhiEquals, 4, {}});
    c.claims.push_back({ClaimKind::ZeroSumFree, 0, {}});
    c.claims.push_back({ClaimKind::SumAvoidingSubset, 0, {1, 2, 5, 10}});
    return c;
}

Construction mersenne_counterexample(int k, const GroupSpec& H) {
    if (k < 3)
        throw Error(Error::Invalid, "mersenne_counterexample: k must be >= 3");
    if (k > 31 || !mersenne_prime(k))
        throw Error(Error::Invalid, "mersenne_counterexample: 2^k-1 is not prime");
    std::uint64_t p = (std::uint64_t{1} << k) - 1;

    std::vector<std::uint64_t> factors{p};
    for (auto q : H.factors()) factors.push_back(q);
    GroupSpec g = GroupSpec::from_factors(factors);

    GroupSet a(g.order());
    std::uint64_t hord = H.order();
    std::uint64_t pw = 1;
    for (int j = 0; j < k; ++j) {
        for (std::uint64_t h = 0; h < hord; ++h) a.insert(pw * hord + h);
        pw = (pw * 2) % p;
    }

    Construction c;
    c.name = "mersenne(k=" + std::to_string(k) + ", H=" + H.name() + ")";
    c.group = g;
    c.set = a;
    c.claims.push_back({ClaimKind::Cardinality, std::uint64_t(k) * hord, {}});
    c.claims.push_back({ClaimKind::ZeroSumFree, 0, {}});
    if (k == 3)
        c.claims.push_back({ClaimKind::PhiEquals, 3, {}});
    else
        c.claims.push_back({ClaimKind::MeasurePhi, 0, {}});
    return c;
}

Construction subgroup_union(const GroupSpec& g, const std::vector<Subgroup>& subs,
                            const GroupSet& extras) {
    GroupSet a(g.order());
    for (const auto& h : subs) {
        if (!is_subgroup(g, h.elements))
            throw Error(Error::Invalid, "subgroup_union: not a subgroup");
        a = set_union(a, h.elements);
    }
    a = set_union(a, extras);

    Construction c;
    c.name = "subgroup_union(m=" + std::to_string(subs.size()) + ")";
    c.group = g;
    c.set = a;
    // subadditivity: each subgroup contributes phi <= 1, each extra <= 1
    c.claims.push_back({ClaimKind::PhiAtMost, subs.size() + extras.card(), {}});
    return c;
}

Construction coset_trap(const GroupSpec& g, const Subgroup& H, std::uint64_t x,
                        const GroupSet& mask) {
    if (!is_subgroup(g, H.elements))
        throw Error(Error::Invalid, "coset_trap: H is not a subgroup");
    if (H.elements.contains(x))
        throw Error(Error::Invalid, "coset_trap: x must lie outside H");
    if (!H.elements.contains(g.add(x, x)))
        throw Error(Error::Invalid, "coset_trap: 2x must lie in H");
    GroupSet coset(g.order());
    for (auto h : H.elements.elements()) coset.insert(g.add(x, h));
    if (!mask.is_subset_of(coset))
        throw Error(Error::Invalid, "coset_trap: mask must be a subset of x+H");

    Construction c;
    c.name = "coset_trap(x=" + std::to_string(x) + ")";
    c.group = g;
    c.set = set_union(H.elements, mask);
    c.claims.push_back({ClaimKind::PhiAtMost, 2, {}});
    c.claims.push_back({ClaimKind::MeasurePhiOutsideSubgroup, 0,
                        H.elements.elements()});
    return c;
}

}  // namespace sumfree
