#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "sumfree/group.hpp"
#include "sumfree/intset.hpp"
#include "sumfree/rng.hpp"

using namespace sumfree;

TEST_CASE("group spec parsing") {
    GroupSpec g = GroupSpec::parse("Z8xZ3");
    CHECK(g.factors() == std::vector<std::uint64_t>{8, 3});
    CHECK(g.order() == 24);
    CHECK(g.name() == "Z8xZ3");
    CHECK(GroupSpec::parse("Z2").order() == 2);
    CHECK(GroupSpec::parse("Z2xZ2xZ2").order() == 8);

    CHECK_THROWS_AS(GroupSpec::parse(""), Error);
    CHECK_THROWS_AS(GroupSpec::parse("Z1"), Error);
    CHECK_THROWS_AS(GroupSpec::parse("Z0"), Error);
    CHECK_THROWS_AS(GroupSpec::parse("8"), Error);
    CHECK_THROWS_AS(GroupSpec::parse("Z8x"), Error);
    CHECK_THROWS_AS(GroupSpec::parse("Z8xZ"), Error);
    CHECK_THROWS_AS(GroupSpec::parse("Z8yZ3"), Error);
    CHECK_THROWS_AS(GroupSpec::parse("Z99999999999999999999"), Error);
}

TEST_CASE("encode/decode round trip and addition against coordinates") {
    GroupSpec g = GroupSpec::parse("Z6xZ4xZ2");
    REQUIRE(g.order() == 48);
    for (std::uint64_t e = 0; e < g.order(); ++e)
        CHECK(g.encode(g.decode(e)) == e);

    SplitMix64 rng(11);
    for (int t = 0; t < 200; ++t) {
        std::uint64_t x = rng.below(g.order()), y = rng.below(g.order());
        auto cx = g.decode(x), cy = g.decode(y);
        std::vector<std::uint64_t> cs(3);
        for (int i = 0; i < 3; ++i)
            cs[std::size_t(i)] = (cx[std::size_t(i)] + cy[std::size_t(i)]) % g.factors()[std::size_t(i)];
        CHECK(g.add(x, y) == g.encode(cs));
        CHECK(g.add(x, g.neg(x)) == 0);
        CHECK(g.add(g.neg(x), x) == 0);
    }
}

TEST_CASE("exponent is the lcm of the factors") {
    CHECK(GroupSpec::parse("Z8xZ3").exponent() == 24);
    CHECK(GroupSpec::parse("Z2xZ2").exponent() == 2);
    CHECK(GroupSpec::parse("Z12xZ18").exponent() == 36);
    CHECK(GroupSpec::parse("Z7").exponent() == 7);
}

TEST_CASE("sumset and restricted sumset match a brute-force oracle") {
    GroupSpec g = GroupSpec::parse("Z5xZ4");
    SplitMix64 rng(23);
    for (int t = 0; t < 50; ++t) {
        GroupSet S(g.order()), T(g.order());
        for (int i = 0; i < 6; ++i) {
            S.insert(rng.below(g.order()));
            T.insert(rng.below(g.order()));
        }
        std::set<std::uint64_t> want;
        for (auto s : S.elements())
            for (auto u : T.elements()) want.insert(g.add(s, u));
        GroupSet got = sumset(g, S, T);
        CHECK(got.elements() == std::vector<std::uint64_t>(want.begin(), want.end()));

        want.clear();
        for (auto s : S.elements())
            for (auto u : S.elements())
                if (s != u) want.insert(g.add(s, u));
        GroupSet r = restricted_sumset(g, S);
        CHECK(r.elements() == std::vector<std::uint64_t>(want.begin(), want.end()));
    }
}

TEST_CASE("dilation by a unit is a bijection; c=1 and c=-1 special cases") {
    GroupSpec g = GroupSpec::parse("Z15");
    GroupSet S(g.order());
    for (auto e : {1u, 2u, 4u, 9u}) S.insert(e);
    CHECK(dilate(g, S, 1) == S);
    GroupSet negS(g.order());
    for (auto e : S.elements()) negS.insert(g.neg(e));
    CHECK(dilate(g, S, -1) == negS);
    for (long long c : {2, 4, 7, 8, 11, 13, 14}) {  // units mod 15
        CHECK(dilate(g, S, c).card() == S.card());
        CHECK(dilate(g, dilate(g, S, c), 1) == dilate(g, S, c));
    }
    CHECK(dilate(g, S, 3).card() < S.card());  // 3 is not a unit: 1*3 == 6*3... collisions allowed
}

TEST_CASE("is_subgroup and generated_subgroup") {
    GroupSpec g = GroupSpec::parse("Z12");
    GroupSet H(g.order());
    for (auto e : {0u, 4u, 8u}) H.insert(e);
    CHECK(is_subgroup(g, H));
    GroupSet notH(g.order());
    for (auto e : {0u, 4u, 7u}) notH.insert(e);
    CHECK(!is_subgroup(g, notH));
    GroupSet noZero(g.order());
    noZero.insert(4);
    CHECK(!is_subgroup(g, noZero));

    GroupSet gens(g.order());
    gens.insert(8);
    Subgroup s = generated_subgroup(g, gens);
    CHECK(s.order == 3);
    CHECK(s.elements.elements() == std::vector<std::uint64_t>{0, 4, 8});
    CHECK(is_subgroup(g, s.elements));
}

TEST_CASE("subgroup enumeration matches brute force on small groups") {
    for (const char* name : {"Z12", "Z2xZ2", "Z8", "Z2xZ4", "Z3xZ3", "Z16"}) {
        GroupSpec g = GroupSpec::parse(name);
        REQUIRE(g.order() <= 16);
        // brute force: every subset containing 0 that is closed under addition
        std::set<std::vector<std::uint64_t>> want;
        for (std::uint32_t mask = 1; mask < (1u << g.order()); ++mask) {
            if (!(mask & 1)) continue;  // must contain 0
            bool closed = true;
            for (std::uint64_t a = 0; a < g.order() && closed; ++a) {
                if (!(mask >> a & 1)) continue;
                for (std::uint64_t b = a; b < g.order(); ++b) {
                    if (!(mask >> b & 1)) continue;
                    if (!(mask >> g.add(a, b) & 1)) { closed = false; break; }
                }
            }
            if (!closed) continue;
            std::vector<std::uint64_t> elems;
            for (std::uint64_t a = 0; a < g.order(); ++a)
                if (mask >> a & 1) elems.push_back(a);
            want.insert(elems);
        }
        auto got = subgroups(g);
        CHECK(got.size() == want.size());
        for (const auto& s : got) {
            CHECK(want.count(s.elements.elements()) == 1);
            CHECK(s.order == s.elements.card());
        }
        // sorted by (order, lexicographic element list)
        for (std::size_t i = 1; i < got.size(); ++i) {
            if (got[i - 1].order != got[i].order)
                CHECK(got[i - 1].order < got[i].order);
            else
                CHECK(got[i - 1].elements.bits().lex_less(got[i].elements.bits()));
        }
    }
    // divisor count sanity: cyclic groups have one subgroup per divisor
    CHECK(subgroups(GroupSpec::parse("Z12")).size() == 6);
    CHECK(subgroups(GroupSpec::parse("Z2xZ2")).size() == 5);
}

TEST_CASE("group set operations") {
    GroupSet a(10), b(10);
    for (auto e : {1u, 2u, 3u}) a.insert(e);
    for (auto e : {3u, 4u}) b.insert(e);
    CHECK(set_union(a, b).card() == 4);
    CHECK(set_intersect(a, b).elements() == std::vector<std::uint64_t>{3});
    CHECK(set_minus(a, b).elements() == std::vector<std::uint64_t>{1, 2});
    CHECK(a.intersects(b));
    CHECK(set_intersect(a, b).is_subset_of(a));
    CHECK_THROWS_AS(a.insert(10), Error);
    a.erase(3);
    CHECK(!a.intersects(b));
}

TEST_CASE("integer sets: sumsets and overflow guard") {
    IntSet A = IntSet::of({3, 1, 2, 2});
    CHECK(A.elements() == std::vector<long long>{1, 2, 3});
    CHECK(sumset(A, A).elements() == std::vector<long long>{2, 3, 4, 5, 6});
    CHECK(restricted_sumset(A).elements() == std::vector<long long>{3, 4, 5});
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), Error);
    CHECK(checked_add(-5, 3) == -2);
}
