#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sumfree/rng.hpp"
#include "sumfree/solvers.hpp"

using namespace sumfree;

namespace {

Ambient zmod(const char* name) { return Ambient::finite(GroupSpec::parse(name)); }

// random (group, set) instance; |A| in [lo, hi]
struct Instance {
    Ambient amb;
    std::vector<long long> A;
};

Instance random_instance(SplitMix64& rng, int lo, int hi) {
    static const char* kGroups[] = {"Z7",    "Z11",   "Z16",   "Z24",  "Z2xZ8",
                                    "Z3xZ9", "Z5xZ5", "Z2xZ2xZ6", "Z30", "Z13"};
    GroupSpec g = GroupSpec::parse(kGroups[rng.below(10)]);
    std::size_t size = std::size_t(lo) + rng.below(std::uint64_t(hi - lo + 1));
    GroupSet s(g.order());
    while (s.card() < std::min<std::uint64_t>(size, g.order()))
        s.insert(rng.below(g.order()));
    Instance in{Ambient::finite(g), {}};
    for (auto e : s.elements()) in.A.push_back((long long)e);
    return in;
}

bool witness_is_valid_phi(const Ambient& amb, const std::vector<long long>& A,
                          const std::vector<long long>& B) {
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j) {
            long long s = amb.add(B[i], B[j]);
            if (std::find(A.begin(), A.end(), s) != A.end()) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("frozen phi values") {
    CHECK(phi(zmod("Z16"), {1, 2, 4, 5, 9, 10, 13}).value == 4);
    CHECK(phi(zmod("Z7"), {1, 2, 4}).value == 3);
    CHECK(phi(Ambient::integers(), {1, 2, 3}).value == 2);
    // {2,3} also attains the optimum, but {1,3} (1+3=4 not in A) comes first
    CHECK(phi(Ambient::integers(), {1, 2, 3}).witness == std::vector<long long>{1, 3});
    CHECK(phi(Ambient::integers(), {0}).value == 1);
    CHECK(phi(zmod("Z5"), {0, 1, 2, 3, 4}).value == 1);
    CHECK(phi(Ambient::integers(), {1}).value == 1);
    CHECK(phi(zmod("Z5"), {}).value == 0);
}

TEST_CASE("phi_at_most agrees with phi and early-exits correctly") {
    std::vector<long long> a42 = {1, 2, 4, 5, 9, 10, 13};
    Ambient z16 = zmod("Z16");
    CHECK(phi_at_most(z16, a42, 4));
    CHECK(!phi_at_most(z16, a42, 3));
    CHECK(!phi_at_most(zmod("Z7"), {1, 2, 4}, 2));
    CHECK(phi_at_most(zmod("Z7"), {1, 2, 4}, 3));
    CHECK(phi_at_most(zmod("Z5"), {}, 0));
    CHECK(!phi_at_most(zmod("Z5"), {1}, 0));
    CHECK_THROWS_AS(phi_at_most(zmod("Z5"), {1}, -1), Error);

    SplitMix64 rng(5);
    for (int t = 0; t < 40; ++t) {
        Instance in = random_instance(rng, 3, 10);
        auto v = phi(in.amb, in.A);
        for (int k = 0; k <= int(in.A.size()); ++k)
            CHECK(phi_at_most(in.amb, in.A, k) == (v.value <= std::uint64_t(k)));
    }
}

TEST_CASE("strong_f on the powers of two is 1") {
    for (int n = 2; n <= 10; ++n) {
        std::vector<long long> A;
        for (int j = 0; j < n; ++j) A.push_back(1LL << j);
        auto v = strong_f(Ambient::integers(), A);
        CHECK(v.value == 1);
        CHECK(v.witness == std::vector<long long>{1LL << (n - 1)});
    }
}

TEST_CASE("solvers match the exhaustive oracle, with lex-least witnesses") {
    SplitMix64 rng(77);
    for (int t = 0; t < 60; ++t) {
        Instance in = random_instance(rng, 3, 12);
        oracle::Maxima m = oracle::enumerate(in.amb, in.A);

        auto vp = phi(in.amb, in.A);
        auto vf = f_value(in.amb, in.A);
        auto vs = strong_f(in.amb, in.A);
        CHECK(vp.value == std::uint64_t(m.phi));
        CHECK(vf.value == std::uint64_t(m.f));
        CHECK(vs.value == std::uint64_t(m.strong));
        CHECK(vp.optimal);
        CHECK(vf.optimal);
        CHECK(vs.optimal);
        CHECK(vp.witness == oracle::mask_elems(in.A, m.phi_witness));
        CHECK(vf.witness == oracle::mask_elems(in.A, m.f_witness));
        CHECK(vs.witness == oracle::mask_elems(in.A, m.strong_witness));
    }
}

TEST_CASE("ordering properties and phi witness validity") {
    SplitMix64 rng(123);
    for (int t = 0; t < 60; ++t) {
        Instance in = random_instance(rng, 1, 12);
        auto vp = phi(in.amb, in.A);
        auto vf = f_value(in.amb, in.A);
        auto vs = strong_f(in.amb, in.A);
        CHECK(vs.value <= vf.value);
        CHECK(vf.value <= in.A.size());
        CHECK(vp.value >= 1);
        CHECK(vp.value <= in.A.size());
        CHECK(witness_is_valid_phi(in.amb, in.A, vp.witness));
    }
}

// The 2/7 bound concerns sparse sets of nonzero elements: dense subsets of
// small-torsion groups (e.g. all nonzero elements of Z7) force strong_f to 0,
// so the property is sampled where the sums have room to leave A.
TEST_CASE("Alon-Kleitman 2/7 property on sparse nonzero sets") {
    static const char* kGroups[] = {"Z53", "Z64", "Z97", "Z101", "Z128",
                                    "Z5xZ25", "Z7xZ11", "Z3xZ37", "Z149", "Z2xZ64"};
    SplitMix64 rng(2024);
    for (int t = 0; t < 60; ++t) {
        GroupSpec g = GroupSpec::parse(kGroups[rng.below(10)]);
        std::size_t size = 4 + rng.below(15);  // 4..18
        GroupSet s(g.order());
        while (s.card() < size) {
            std::uint64_t e = rng.below(g.order());
            if (e != 0) s.insert(e);
        }
        std::vector<long long> A;
        for (auto e : s.elements()) A.push_back((long long)e);
        auto vs = strong_f(Ambient::finite(g), A);
        CHECK(7 * vs.value > 2 * A.size());
    }
}

TEST_CASE("subadditivity of phi over unions") {
    SplitMix64 rng(321);
    for (int t = 0; t < 40; ++t) {
        GroupSpec g = GroupSpec::parse(t % 2 ? "Z20" : "Z3xZ6");
        GroupSet A(g.order()), B(g.order());
        for (int i = 0; i < 5; ++i) {
            A.insert(rng.below(g.order()));
            B.insert(rng.below(g.order()));
        }
        auto to_vec = [](const GroupSet& s) {
            std::vector<long long> v;
            for (auto e : s.elements()) v.push_back((long long)e);
            return v;
        };
        Ambient amb = Ambient::finite(g);
        auto u = phi(amb, to_vec(set_union(A, B)));
        CHECK(u.value <= phi(amb, to_vec(A)).value + phi(amb, to_vec(B)).value);
    }
}

TEST_CASE("dilation invariance of phi and f") {
    SplitMix64 rng(9);
    GroupSpec g = GroupSpec::parse("Z15");
    Ambient amb = Ambient::finite(g);
    for (int t = 0; t < 20; ++t) {
        GroupSet A(g.order());
        for (int i = 0; i < 6; ++i) A.insert(rng.below(g.order()));
        for (long long c : {2, 4, 7, 11}) {  // units mod 15
            GroupSet D = dilate(g, A, c);
            std::vector<long long> a, d;
            for (auto e : A.elements()) a.push_back((long long)e);
            for (auto e : D.elements()) d.push_back((long long)e);
            CHECK(phi(amb, a).value == phi(amb, d).value);
            CHECK(f_value(amb, a).value == f_value(amb, d).value);
        }
    }
}

TEST_CASE("max sum-free subsets of whole small groups match brute force") {
    for (const char* name : {"Z2", "Z3", "Z5", "Z8", "Z10", "Z2xZ4", "Z3xZ3"}) {
        GroupSpec g = GroupSpec::parse(name);
        std::vector<long long> all;
        for (std::uint64_t e = 0; e < g.order(); ++e) all.push_back((long long)e);
        oracle::Maxima m = oracle::enumerate(Ambient::finite(g), all);
        auto v = max_sum_free(g);
        CHECK(v.value == std::uint64_t(m.f));
        CHECK(v.optimal);
    }
    CHECK_THROWS_AS(max_sum_free(GroupSpec::parse("Z200")), Error);
}

TEST_CASE("zero-sum pair detection") {
    GroupSpec g = GroupSpec::parse("Z9");
    CHECK(zero_sum_pair(g, GroupSet::of(9, {2, 7, 3})) ==
          std::make_pair(std::uint64_t(2), std::uint64_t(7)));
    CHECK(zero_sum_pair(g, GroupSet::of(9, {1, 2, 4})) == std::nullopt);
    CHECK(zero_sum_pair(g, GroupSet::of(9, {0})) ==
          std::make_pair(std::uint64_t(0), std::uint64_t(0)));  // 0+0=0 counts
    GroupSpec z8 = GroupSpec::parse("Z8");
    CHECK(zero_sum_pair(z8, GroupSet::of(8, {4})) ==
          std::make_pair(std::uint64_t(4), std::uint64_t(4)));  // self-inverse
}

TEST_CASE("budgets surface as non-optimal results") {
    std::vector<long long> A;
    GroupSpec g = GroupSpec::parse("Z64");
    SplitMix64 rng(4);
    GroupSet s(g.order());
    while (s.card() < 20) s.insert(rng.below(g.order()));
    for (auto e : s.elements()) A.push_back((long long)e);
    SolverBudget tiny{.node_limit = 3, .time_limit_seconds = 0};
    auto v = phi(Ambient::finite(g), A, tiny);
    CHECK(!v.optimal);
    CHECK(v.nodes >= 3);
    auto full = phi(Ambient::finite(g), A);
    CHECK(full.optimal);
    CHECK(v.value <= full.value);  // budgeted value is a lower bound
}

TEST_CASE("determinism: identical calls give identical results") {
    SplitMix64 rng(55);
    Instance in = random_instance(rng, 8, 12);
    auto a = phi(in.amb, in.A);
    auto b = phi(in.amb, in.A);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes == b.nodes);
}
