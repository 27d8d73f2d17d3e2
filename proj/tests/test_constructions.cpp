#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumfree/constructions.hpp"
#include "sumfree/verify.hpp"

using namespace sumfree;

namespace {

bool all_hold(const Construction& c) {
    for (const auto& r : verify_claims(c))
        if (!r.holds) return false;
    return true;
}

const ClaimResult* find_claim(const std::vector<ClaimResult>& rs, ClaimKind k) {
    for (const auto& r : rs)
        if (r.claim.kind == k) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("power-of-two construction: exact set for n=4") {
    Construction c = power_of_two_counterexample(4);
    CHECK(c.group.name() == "Z16");
    CHECK(c.set.elements() ==
          std::vector<std::uint64_t>{1, 2, 4, 5, 9, 10, 13});
    CHECK(all_hold(c));
}

TEST_CASE("power-of-two construction: claims hold for n=4..8") {
    for (int n = 4; n <= 8; ++n) {
        Construction c = power_of_two_counterexample(n);
        CHECK(c.set.card() == (std::uint64_t(1) << (n - 1)) - 1);
        auto rs = verify_claims(c);
        for (const auto& r : rs) CHECK(r.holds);
        const ClaimResult* pc = find_claim(rs, ClaimKind::PhiEquals);
        REQUIRE(pc != nullptr);
        CHECK(pc->measured == 4);
    }
    CHECK_THROWS_AS(power_of_two_counterexample(3), Error);
    CHECK_THROWS_AS(power_of_two_counterexample(21), Error);
}

TEST_CASE("Mersenne construction: k=3 with trivial and Z5 cofactor") {
    Construction triv = mersenne_counterexample(3, GroupSpec::from_factors({}));
    CHECK(triv.group.order() == 7);
    CHECK(triv.set.elements() == std::vector<std::uint64_t>{1, 2, 4});
    CHECK(all_hold(triv));

    Construction c = mersenne_counterexample(3, GroupSpec::parse("Z5"));
    CHECK(c.group.order() == 35);
    CHECK(c.set.card() == 15);
    auto rs = verify_claims(c);
    for (const auto& r : rs) CHECK(r.holds);
    const ClaimResult* pc = find_claim(rs, ClaimKind::PhiEquals);
    REQUIRE(pc != nullptr);
    CHECK(pc->claim.expected == 3);
    CHECK(pc->measured == 3);
}

TEST_CASE("Mersenne construction: phi asserted only at k=3") {
    for (std::uint64_t h : {1, 2, 3, 5, 8}) {
        GroupSpec H = h == 1 ? GroupSpec::from_factors({})
                             : GroupSpec::from_factors({h});
        Construction c = mersenne_counterexample(3, H);
        CHECK(c.set.card() == 3 * h);
        CHECK(all_hold(c));
    }
    // k=5: 31 prime; phi is measured, not asserted
    Construction k5 = mersenne_counterexample(5, GroupSpec::from_factors({}));
    CHECK(k5.set.elements() == std::vector<std::uint64_t>{1, 2, 4, 8, 16});
    auto rs = verify_claims(k5);
    CHECK(find_claim(rs, ClaimKind::PhiEquals) == nullptr);
    const ClaimResult* mp = find_claim(rs, ClaimKind::MeasurePhi);
    REQUIRE(mp != nullptr);
    CHECK(mp->has_measured);
    CHECK(mp->holds);  // measurements never fail

    CHECK_THROWS_AS(mersenne_counterexample(2, GroupSpec::from_factors({})), Error);
    CHECK_THROWS_AS(mersenne_counterexample(4, GroupSpec::from_factors({})), Error);  // 15 = 3*5
}

TEST_CASE("subgroup union constructions") {
    GroupSpec z6 = GroupSpec::parse("Z6");
    auto subs6 = subgroups(z6);
    // pick {0,2,4} and {0,3}
    std::vector<Subgroup> pair;
    for (const auto& s : subs6)
        if (s.order == 2 || s.order == 3) pair.push_back(s);
    REQUIRE(pair.size() == 2);
    Construction c = subgroup_union(z6, pair, GroupSet(6));
    CHECK(c.set.elements() == std::vector<std::uint64_t>{0, 2, 3, 4});
    auto rs = verify_claims(c);
    const ClaimResult* pm = find_claim(rs, ClaimKind::PhiAtMost);
    REQUIRE(pm != nullptr);
    CHECK(pm->claim.expected == 2);
    CHECK(pm->holds);

    // no subgroups, one extra element: phi = 1
    GroupSet extras(6);
    extras.insert(5);
    Construction single = subgroup_union(z6, {}, extras);
    auto rs2 = verify_claims(single);
    const ClaimResult* pm2 = find_claim(rs2, ClaimKind::PhiAtMost);
    REQUIRE(pm2 != nullptr);
    CHECK(pm2->claim.expected == 1);
    CHECK(pm2->holds);

    GroupSpec z12 = GroupSpec::parse("Z12");
    GroupSet gens(12);
    gens.insert(4);
    GroupSet extra1(12);
    extra1.insert(1);
    Construction c12 = subgroup_union(z12, {generated_subgroup(z12, gens)}, extra1);
    CHECK(c12.set.elements() == std::vector<std::uint64_t>{0, 1, 4, 8});
    CHECK(all_hold(c12));
}

TEST_CASE("coset trap constructions") {
    GroupSpec z4 = GroupSpec::parse("Z4");
    GroupSet h4(4);
    h4.insert(0);
    h4.insert(2);
    Subgroup H4{h4, 2};
    Construction full = coset_trap(z4, H4, 1, GroupSet::of(4, {1, 3}));
    CHECK(full.set.card() == 4);  // A = Z4
    auto rs = verify_claims(full);
    for (const auto& r : rs) CHECK(r.holds);
    const ClaimResult* mp = find_claim(rs, ClaimKind::MeasurePhiOutsideSubgroup);
    REQUIRE(mp != nullptr);

    GroupSpec z8 = GroupSpec::parse("Z8");
    Subgroup H8{GroupSet::of(8, {0, 2, 4, 6}), 4};
    Construction trap = coset_trap(z8, H8, 1, GroupSet::of(8, {1, 5}));
    CHECK(trap.set.elements() == std::vector<std::uint64_t>{0, 1, 2, 4, 5, 6});
    CHECK(all_hold(trap));

    Construction bare = coset_trap(z8, H8, 1, GroupSet(8));
    CHECK(bare.set == H8.elements);
    CHECK(all_hold(bare));

    // 2x must land in H and x outside H; mask must sit inside x+H
    CHECK_THROWS_AS(coset_trap(z8, H8, 2, GroupSet(8)), Error);       // x in H
    CHECK_THROWS_AS(coset_trap(z8, H8, 1, GroupSet::of(8, {2})), Error);  // mask off-coset
    GroupSpec z9 = GroupSpec::parse("Z9");
    Subgroup H9{GroupSet::of(9, {0, 3, 6}), 3};
    CHECK_THROWS_AS(coset_trap(z9, H9, 1, GroupSet(9)), Error);  // 2x not in H
}

TEST_CASE("verify_claims reports a false claim instead of hiding it") {
    Construction c = power_of_two_counterexample(4);
    for (auto& cl : c.claims)
        if (cl.kind == ClaimKind::PhiEquals) cl.expected = 5;
    auto rs = verify_claims(c);
    const ClaimResult* pc = find_claim(rs, ClaimKind::PhiEquals);
    REQUIRE(pc != nullptr);
    CHECK(!pc->holds);
    CHECK(pc->measured == 4);
}
