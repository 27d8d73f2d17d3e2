#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sumfree/bitset.hpp"
#include "sumfree/error.hpp"

namespace sumfree {

// Largest group order we will index; keeps GroupSet bitmaps flat and cheap.
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

// A finite abelian group given as an ordered list of cyclic factors
// Z/q_1 x ... x Z/q_m, each q_i >= 2. The empty list is the trivial group.
// Elements are canonical mixed-radix indices: the first factor is the most
// significant digit.
class GroupSpec {
public:
    GroupSpec() = default;

    // grammar: Z<n>(xZ<m>)*, n,m >= 2 decimal
    static GroupSpec parse(std::string_view text);
    static GroupSpec from_factors(std::vector<std::uint64_t> factors);

    const std::vector<std::uint64_t>& factors() const { return factors_; }
    std::uint64_t order() const { return order_; }

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const;
    std::uint64_t neg(std::uint64_t x) const;

    std::uint64_t encode(const std::vector<std::uint64_t>& coords) const;
    std::vector<std::uint64_t> decode(std::uint64_t index) const;

    // largest order of any element = lcm of the factors
    std::uint64_t exponent() const;

    std::string name() const;  // "Z8xZ3"

    bool operator==(const GroupSpec&) const = default;

private:
    std::vector<std::uint64_t> factors_;
    std::uint64_t order_ = 1;
};

// Dense membership bitmap over the element indices of one group (or, for
// solver-internal uses, over any fixed index range), with cached cardinality.
class GroupSet {
public:
    GroupSet() = default;
    explicit GroupSet(std::uint64_t order) : bits_(order) {}

    static GroupSet of(std::uint64_t order, const std::vector<std::uint64_t>& elems) {
        GroupSet s(order);
        for (auto e : elems) s.insert(e);
        return s;
    }

    std::uint64_t universe() const { return bits_.size(); }
    std::uint64_t card() const { return card_; }
    bool empty() const { return card_ == 0; }

    bool contains(std::uint64_t e) const { return bits_.test(e); }
    void insert(std::uint64_t e) {
        if (e >= bits_.size()) throw Error(Error::Invalid, "element index out of range");
        if (!bits_.test(e)) { bits_.set(e); ++card_; }
    }
    void erase(std::uint64_t e) {
        if (bits_.test(e)) { bits_.reset(e); --card_; }
    }

    const Bitset& bits() const { return bits_; }
    std::vector<std::uint64_t> elements() const { return bits_.elements(); }

    bool is_subset_of(const GroupSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool intersects(const GroupSet& o) const { return bits_.intersects(o.bits_); }

    friend GroupSet set_union(GroupSet a, const GroupSet& b) {
        a.bits_ |= b.bits_;
        a.card_ = a.bits_.count();
        return a;
    }
    friend GroupSet set_intersect(GroupSet a, const GroupSet& b) {
        a.bits_ &= b.bits_;
        a.card_ = a.bits_.count();
        return a;
    }
    friend GroupSet set_minus(GroupSet a, const GroupSet& b) {
        a.bits_.andnot(b.bits_);
        a.card_ = a.bits_.count();
        return a;
    }

    bool operator==(const GroupSet&) const = default;

private:
    Bitset bits_;
    std::uint64_t card_ = 0;
};

struct Subgroup {
    GroupSet elements;
    std::uint64_t order = 0;
};

// { s + t : s in S, t in T }; doubles included when S = T
GroupSet sumset(const GroupSpec& g, const GroupSet& S, const GroupSet& T);

// { s + s' : s, s' in S, s != s' as set members }
GroupSet restricted_sumset(const GroupSpec& g, const GroupSet& S);

// { c * s : s in S }; c may be negative; coprimality is the caller's concern
GroupSet dilate(const GroupSpec& g, const GroupSet& S, long long c);

// contains 0 and closed under addition (negation follows in a finite group)
bool is_subgroup(const GroupSpec& g, const GroupSet& S);

// closure of gens (plus 0) under addition
Subgroup generated_subgroup(const GroupSpec& g, const GroupSet& gens);

struct SubgroupCaps {
    std::uint64_t max_order = 4096;
    std::size_t max_count = 100000;
};

// every subgroup exactly once, sorted by (order, lexicographic element list)
std::vector<Subgroup> subgroups(const GroupSpec& g, const SubgroupCaps& caps = {});

}  // namespace sumfree
