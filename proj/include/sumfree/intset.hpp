#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sumfree/error.hpp"

namespace sumfree {

// A finite set of signed integers: sorted unique list, binary-search membership.
class IntSet {
public:
    IntSet() = default;

    static IntSet of(std::vector<long long> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        IntSet s;
        s.v_ = std::move(v);
        return s;
    }

    std::size_t card() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    bool contains(long long x) const {
        return std::binary_search(v_.begin(), v_.end(), x);
    }
    const std::vector<long long>& elements() const { return v_; }

    bool operator==(const IntSet&) const = default;

private:
    std::vector<long long> v_;
};

long long checked_add(long long a, long long b);

IntSet sumset(const IntSet& S, const IntSet& T);
IntSet restricted_sumset(const IntSet& S);

}  // namespace sumfree
