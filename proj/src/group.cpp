#include "sumfree/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>

namespace sumfree {

GroupSpec GroupSpec::parse(std::string_view text) {
    std::vector<std::uint64_t> factors;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != 'Z')
            throw Error(Error::Parse, "group spec: expected 'Z' at position " + std::to_string(pos));
        ++pos;
        std::uint64_t n = 0;
        auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), n);
        if (ec != std::errc{} || p == text.data() + pos)
            throw Error(Error::Parse, "group spec: expected a number after 'Z'");
        pos = std::size_t(p - text.data());
        factors.push_back(n);
        if (pos < text.size()) {
            if (text[pos] != 'x')
                throw Error(Error::Parse, "group spec: expected 'x' between factors");
            ++pos;
            if (pos == text.size())
                throw Error(Error::Parse, "group spec: trailing 'x'");
        }
    }
    if (factors.empty()) throw Error(Error::Parse, "group spec: empty");
    return from_factors(std::move(factors));
}

GroupSpec GroupSpec::from_factors(std::vector<std::uint64_t> factors) {
    GroupSpec g;
    g.order_ = 1;
    for (auto q : factors) {
        if (q < 2) throw Error(Error::Invalid, "group factor must be >= 2");
        if (g.order_ > kMaxOrder / q)
            throw Error(Error::Invalid, "group order exceeds index width");
        g.order_ *= q;
    }
    g.factors_ = std::move(factors);
    return g;
}

std::uint64_t GroupSpec::add(std::uint64_t x, std::uint64_t y) const {
    if (x >= order_ || y >= order_)
        throw Error(Error::Invalid, "element index out of range");
    std::uint64_t r = 0, mul = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        std::uint64_t q = factors_[i];
        std::uint64_t xd = x % q, yd = y % q;
        x /= q;
        y /= q;
        r += ((xd + yd) % q) * mul;
        mul *= q;
    }
    return r;
}

std::uint64_t GroupSpec::neg(std::uint64_t x) const {
    if (x >= order_) throw Error(Error::Invalid, "element index out of range");
    std::uint64_t r = 0, mul = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        std::uint64_t q = factors_[i];
        std::uint64_t xd = x % q;
        x /= q;
        r += (xd == 0 ? 0 : q - xd) * mul;
        mul *= q;
    }
    return r;
}

std::uint64_t GroupSpec::encode(const std::vector<std::uint64_t>& coords) const {
    if (coords.size() != factors_.size())
        throw Error(Error::Invalid, "coordinate arity mismatch");
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (coords[i] >= factors_[i])
            throw Error(Error::Invalid, "coordinate out of range");
        r = r * factors_[i] + coords[i];
    }
    return r;
}

std::vector<std::uint64_t> GroupSpec::decode(std::uint64_t index) const {
    if (index >= order_) throw Error(Error::Invalid, "element index out of range");
    std::vector<std::uint64_t> coords(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        coords[i] = index % factors_[i];
        index /= factors_[i];
    }
    return coords;
}

std::uint64_t GroupSpec::exponent() const {
    std::uint64_t m = 1;
    for (auto q : factors_) m = std::lcm(m, q);
    return m;
}

std::string GroupSpec::name() const {
    if (factors_.empty()) return "Z1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += 'x';
        s += 'Z';
        s += std::to_string(factors_[i]);
    }
    return s;
}

GroupSet sumset(const GroupSpec& g, const GroupSet& S, const GroupSet& T) {
    GroupSet out(g.order());
    for (auto s : S.elements())
        for (auto t : T.elements()) out.insert(g.add(s, t));
    return out;
}

GroupSet restricted_sumset(const GroupSpec& g, const GroupSet& S) {
    GroupSet out(g.order());
    auto elems = S.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            out.insert(g.add(elems[i], elems[j]));
    return out;
}

GroupSet dilate(const GroupSpec& g, const GroupSet& S, long long c) {
    GroupSet out(g.order());
    for (auto s : S.elements()) {
        std::uint64_t acc = 0;
        std::uint64_t base = c >= 0 ? s : g.neg(s);
        std::uint64_t k = std::uint64_t(c >= 0 ? c : -c);
        // double-and-add, k can be anything
        std::uint64_t pow = base;
        while (k) {
            if (k & 1) acc = g.add(acc, pow);
            pow = g.add(pow, pow);
            k >>= 1;
        }
        out.insert(acc);
    }
    return out;
}

bool is_subgroup(const GroupSpec& g, const GroupSet& S) {
    if (!S.contains(0)) return false;
    auto elems = S.elements();
    for (auto a : elems)
        for (auto b : elems)
            if (!S.contains(g.add(a, b))) return false;
    return true;
}

Subgroup generated_subgroup(const GroupSpec& g, const GroupSet& gens) {
    GroupSet closure(g.order());
    closure.insert(0);
    std::vector<std::uint64_t> frontier = gens.elements();
    for (auto e : frontier) closure.insert(e);
    // close under addition; in a finite group this also closes under negation
    bool grew = true;
    while (grew) {
        grew = false;
        auto elems = closure.elements();
        for (auto a : elems)
            for (auto b : elems) {
                std::uint64_t s = g.add(a, b);
                if (!closure.contains(s)) {
                    closure.insert(s);
                    grew = true;
                }
            }
    }
    return Subgroup{closure, closure.card()};
}

std::vector<Subgroup> subgroups(const GroupSpec& g, const SubgroupCaps& caps) {
    if (g.order() > caps.max_order)
        throw Error(Error::Capped, "group order too large for subgroup enumeration");
    // BFS over the lattice: extend each known subgroup by one outside generator.
    // Every subgroup of order n is reachable with <= log2(n) extensions.
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Subgroup> out;
    std::queue<Subgroup> work;
    Subgroup triv = generated_subgroup(g, GroupSet(g.order()));
    seen.insert(triv.elements.elements());
    out.push_back(triv);
    work.push(triv);
    while (!work.empty()) {
        Subgroup h = std::move(work.front());
        work.pop();
        for (std::uint64_t x = 0; x < g.order(); ++x) {
            if (h.elements.contains(x)) continue;
            GroupSet gens = h.elements;
            gens.insert(x);
            Subgroup ext = generated_subgroup(g, gens);
            auto key = ext.elements.elements();
            if (seen.insert(std::move(key)).second) {
                if (out.size() >= caps.max_count)
                    throw Error(Error::Capped, "subgroup count exceeds cap");
                out.push_back(ext);
                work.push(ext);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.elements.bits().lex_less(b.elements.bits());
    });
    return out;
}

}  // namespace sumfree
