// Independent brute-force oracles used by the unit and acceptance tests.
// Everything here enumerates subsets directly; nothing is shared with the
// branch-and-bound code under test.
#pragma once

#include <cstdint>
#include <vector>

#include "sumfree/ambient.hpp"

namespace oracle {

struct Maxima {
    int phi = 0, f = 0, strong = 0;
    std::uint32_t phi_witness = 0, f_witness = 0, strong_witness = 0;  // masks
};

// Full 2^|A| enumeration. For each subset B of A (given as a bitmask over the
// sorted element list), checks the three conditions:
//   phi:    restricted sums of B avoid all of A
//   f:      sums of B (doubles included) avoid B
//   strong: sums of B (doubles included) avoid all of A
// Witnesses are the lexicographically least maximum subsets in the element
// order (mask with the smallest high elements... we compare by ascending
// element sequence, which for sorted elements equals the mask-as-set order).
inline Maxima enumerate(const sumfree::Ambient& amb,
                        const std::vector<long long>& A) {
    using std::size_t;
    int n = int(A.size());
    // pos[i][j] = index of A[i]+A[j] in A, or -1
    std::vector<int> pos(size_t(n) * size_t(n), -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long s = amb.add(A[size_t(i)], A[size_t(j)]);
            for (int k = 0; k < n; ++k)
                if (A[size_t(k)] == s) { pos[size_t(i) * size_t(n) + size_t(j)] = k; break; }
        }
    auto in_a = [&](int i, int j) { return pos[size_t(i) * size_t(n) + size_t(j)]; };

    // lexicographic order on the ascending element lists of two masks
    auto lex_before = [&](std::uint32_t a, std::uint32_t b) {
        while (a && b) {
            int x = __builtin_ctz(a), y = __builtin_ctz(b);
            if (x != y) return x < y;
            a &= a - 1;
            b &= b - 1;
        }
        return a != 0 && b == 0 ? false : (a == 0 && b != 0);
    };

    Maxima m;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int card = __builtin_popcount(mask);
        bool phi_ok = true, f_ok = true, strong_ok = true;
        for (int i = 0; i < n && (phi_ok || f_ok || strong_ok); ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = i; j < n; ++j) {
                if (!(mask >> j & 1)) continue;
                int s = in_a(i, j);
                if (i != j && s != -1) phi_ok = false;
                if (s != -1) {
                    strong_ok = false;
                    if (mask >> s & 1) f_ok = false;
                }
            }
        }
        if (phi_ok && (card > m.phi || (card == m.phi && lex_before(mask, m.phi_witness)))) {
            m.phi = card;
            m.phi_witness = mask;
        }
        if (f_ok && (card > m.f || (card == m.f && lex_before(mask, m.f_witness)))) {
            m.f = card;
            m.f_witness = mask;
        }
        if (strong_ok &&
            (card > m.strong || (card == m.strong && lex_before(mask, m.strong_witness)))) {
            m.strong = card;
            m.strong_witness = mask;
        }
    }
    return m;
}

inline std::vector<long long> mask_elems(const std::vector<long long>& A,
                                         std::uint32_t mask) {
    std::vector<long long> out;
    for (int i = 0; i < int(A.size()); ++i)
        if (mask >> i & 1) out.push_back(A[std::size_t(i)]);
    return out;
}

}  // namespace oracle
