#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumfree {

// Flat bitset with a size fixed at construction. All binary operations
// require both operands to have the same size.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const {
        assert(i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    void set(std::size_t i) {
        assert(i < n_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < n_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void clear() { for (auto& w : w_) w = 0; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // this \ o
    Bitset& andnot(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }

    bool operator==(const Bitset&) const = default;

    // index of the first set bit at position >= from, or -1
    int find_next(std::size_t from) const {
        if (from >= n_) return -1;
        std::size_t wi = from >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return int((wi << 6) + std::countr_zero(w));
            if (++wi == w_.size()) return -1;
            w = w_[wi];
        }
    }
    int find_first() const { return find_next(0); }

    // lexicographic order on the sorted element lists
    bool lex_less(const Bitset& o) const {
        assert(n_ == o.n_);
        int a = find_first(), b = o.find_first();
        while (a != -1 && b != -1) {
            if (a != b) return a < b;
            a = find_next(std::size_t(a) + 1);
            b = o.find_next(std::size_t(b) + 1);
        }
        return a == -1 && b != -1;
    }

    std::vector<std::uint64_t> elements() const {
        std::vector<std::uint64_t> out;
        for (int i = find_first(); i != -1; i = find_next(std::size_t(i) + 1))
            out.push_back(std::uint64_t(i));
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace sumfree
