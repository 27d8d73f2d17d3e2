#include "sumfree/intset.hpp"

namespace sumfree {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(Error::Invalid, "integer sum overflows 64 bits");
    return r;
}

IntSet sumset(const IntSet& S, const IntSet& T) {
    std::vector<long long> out;
    out.reserve(S.card() * T.card());
    for (auto s : S.elements())
        for (auto t : T.elements()) out.push_back(checked_add(s, t));
    return IntSet::of(std::move(out));
}

IntSet restricted_sumset(const IntSet& S) {
    std::vector<long long> out;
    const auto& v = S.elements();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            out.push_back(checked_add(v[i], v[j]));
    return IntSet::of(std::move(out));
}

}  // namespace sumfree
