#include "sumfree/integer_line.hpp"

#include <algorithm>
#include <queue>

#include "sumfree/bitset.hpp"
#include "sumfree/rng.hpp"

namespace sumfree {
namespace {

// total event budget for the exact sweep; Sigma 2|a| events get merged
constexpr unsigned long long kMaxSweepEvents = 400000000ULL;

struct Event {
    long long p, q;  // position p/q in (0,1)
    int elem;
    bool close;
};
struct EventAfter {
    bool operator()(const Event& a, const Event& b) const {
        // min-heap on position; p,q stay below 3*10^6 + 2 (the sweep event
        // cap keeps magnitudes <= 2*10^8), so int64 products are exact
        return a.p * b.q > b.p * a.q;
    }
};

long long mod_mul(long long a, long long p, long long q) {
    __int128 r = (__int128)(a % q) * (p % q) % q;
    if (r < 0) r += q;
    return (long long)r;
}

bool in_middle_third(long long a, const Rational& alpha) {
    long long r = mod_mul(a, alpha.num, alpha.den);
    return 3 * r > alpha.den && 3 * r < 2 * alpha.den;
}

}  // namespace

SweepResult erdos_third(const IntSet& A) {
    if (A.empty()) throw Error(Error::Invalid, "erdos_third: empty set");
    if (A.contains(0))
        throw Error(Error::Invalid, "erdos_third: 0 has no middle-third dilate");

    const auto& elems = A.elements();
    int n = int(elems.size());
    std::vector<long long> mag(elems.size());
    unsigned long long total_events = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        mag[i] = elems[i] < 0 ? -elems[i] : elems[i];
        total_events += 2 * (unsigned long long)mag[i];
        if (total_events > kMaxSweepEvents)
            throw Error(Error::Capped, "erdos_third: entries too large for exact sweep");
    }

    // per element a with magnitude m, the indicator of frac(a*alpha) in
    // (1/3,2/3) is 1 exactly on the open intervals ((3t+1)/3m, (3t+2)/3m);
    // negative a gives the same indicator by symmetry of the middle third
    std::priority_queue<Event, std::vector<Event>, EventAfter> heap;
    std::vector<long long> t(elems.size(), 0);
    for (int i = 0; i < n; ++i)
        heap.push(Event{1, 3 * mag[i], i, false});

    int count = 0, best_count = -1;
    long long prev_p = 0, prev_q = 1;
    long long best_lo_p = 0, best_lo_q = 1, best_hi_p = 1, best_hi_q = 1;
    // among maximizing gaps, keep the widest (midpoint farthest from both
    // breakpoints); earliest wins ties
    auto wider = [&](long long lop, long long loq, long long hip, long long hiq) {
        __int128 w_new = ((__int128)hip * loq - (__int128)lop * hiq) *
                         ((__int128)best_hi_q * best_lo_q);
        __int128 w_old = ((__int128)best_hi_p * best_lo_q -
                          (__int128)best_lo_p * best_hi_q) *
                         ((__int128)hiq * loq);
        return w_new > w_old;
    };
    while (!heap.empty()) {
        Event e = heap.top();
        // the open gap (prev, e) carries the current count
        if (count > best_count ||
            (count == best_count && wider(prev_p, prev_q, e.p, e.q))) {
            best_count = count;
            best_lo_p = prev_p;
            best_lo_q = prev_q;
            best_hi_p = e.p;
            best_hi_q = e.q;
        }
        // apply every event at this exact position
        while (!heap.empty()) {
            Event f = heap.top();
            if (f.p * e.q != e.p * f.q) break;
            heap.pop();
            count += f.close ? -1 : 1;
            int i = f.elem;
            if (f.close) {
                if (++t[std::size_t(i)] < mag[std::size_t(i)])
                    heap.push(Event{3 * t[std::size_t(i)] + 1, 3 * mag[std::size_t(i)], i, false});
            } else {
                heap.push(Event{3 * t[std::size_t(i)] + 2, 3 * mag[std::size_t(i)], i, true});
            }
        }
        prev_p = e.p;
        prev_q = e.q;
        // the indicator count is symmetric under alpha -> 1 - alpha, so every
        // maximizing gap has a mirror whose left endpoint is below 1/2; gaps
        // starting at or past 1/2 add nothing new
        if (2 * prev_p >= prev_q) break;
    }

    SweepResult out;
    out.alpha = Rational::reduce128(
        (__int128)best_lo_p * best_hi_q + (__int128)best_hi_p * best_lo_q,
        (__int128)2 * best_lo_q * best_hi_q);
    out.count = std::uint64_t(best_count);
    std::vector<long long> b;
    for (auto a : elems)
        if (in_middle_third(a, out.alpha)) b.push_back(a);
    out.B = IntSet::of(std::move(b));
    if (out.B.card() != out.count)
        throw std::logic_error("erdos_third: sweep count mismatch");
    if (3 * out.count < std::uint64_t(n))
        throw std::logic_error("erdos_third: below the n/3 guarantee");
    return out;
}

GreedyTrace turan_greedy(const IntSet& A) {
    if (A.empty()) throw Error(Error::Invalid, "turan_greedy: empty set");
    std::size_t pos = 0, neg = 0;
    for (auto a : A.elements()) {
        if (a > 0) ++pos;
        else if (a < 0) ++neg;
    }
    if (pos == 0 && neg == 0)
        throw Error(Error::Invalid, "turan_greedy: no nonzero elements");

    GreedyTrace tr;
    tr.negated = neg > pos;  // ties go to the positives
    std::vector<long long> work;
    for (auto a : A.elements()) work.push_back(tr.negated ? -a : a);
    IntSet W = IntSet::of(work);
    for (auto a : W.elements())
        if (a > 0) tr.vertices.push_back(a);

    int n = int(tr.vertices.size());
    std::vector<Bitset> adj(std::size_t(n), Bitset{std::size_t(n)});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (W.contains(checked_add(tr.vertices[std::size_t(i)],
                                       tr.vertices[std::size_t(j)]))) {
                adj[std::size_t(i)].set(std::size_t(j));
                adj[std::size_t(j)].set(std::size_t(i));
            }

    tr.caro_wei = Rational(0, 1);
    tr.degrees.resize(std::size_t(n));
    for (int i = 0; i < n; ++i) {
        tr.degrees[std::size_t(i)] = int(adj[std::size_t(i)].count());
        tr.caro_wei = tr.caro_wei + Rational(1, tr.degrees[std::size_t(i)] + 1);
    }

    // repeatedly take a minimum-degree vertex and delete its closed
    // neighborhood; achieves the Caro-Wei bound
    Bitset alive{std::size_t(n)};
    for (int i = 0; i < n; ++i) alive.set(std::size_t(i));
    std::vector<int> picked;
    while (alive.any()) {
        int bestv = -1;
        std::size_t bestd = 0;
        for (int v = alive.find_first(); v != -1;
             v = alive.find_next(std::size_t(v) + 1)) {
            std::size_t d = (adj[std::size_t(v)] & alive).count();
            if (bestv == -1 || d < bestd) { bestv = v; bestd = d; }
        }
        picked.push_back(bestv);
        alive.reset(std::size_t(bestv));
        alive.andnot(adj[std::size_t(bestv)]);
    }
    std::sort(picked.begin(), picked.end());
    for (int v : picked) {
        long long val = tr.vertices[std::size_t(v)];
        tr.B.push_back(tr.negated ? -val : val);
    }
    std::sort(tr.B.begin(), tr.B.end());
    return tr;
}

WitnessedValue integer_phi(const IntSet& A, const SolverBudget& budget) {
    return phi(Ambient::integers(), A.elements(), budget);
}

WitnessedValue integer_f(const IntSet& A, const SolverBudget& budget) {
    return f_value(Ambient::integers(), A.elements(), budget);
}

MinPhiResult min_phi_search(int n, const std::string& strategy,
                            const SolverBudget& budget, std::uint64_t seed) {
    if (n < 1) throw Error(Error::Invalid, "min_phi_search: n must be >= 1");
    if (strategy != "descent" && strategy != "random")
        throw Error(Error::Invalid, "min_phi_search: unknown strategy");

    MinPhiResult out;
    out.strategy = strategy;
    out.seed = seed;
    SplitMix64 rng(seed);
    long long height = std::max<long long>(4 * n, 64);

    auto random_set = [&] {
        std::vector<long long> v;
        Bitset used{std::size_t(height)};
        while (int(v.size()) < n) {
            long long x = (long long)rng.below(std::uint64_t(height)) + 1;
            if (!used.test(std::size_t(x - 1))) {
                used.set(std::size_t(x - 1));
                v.push_back(x);
            }
        }
        std::sort(v.begin(), v.end());
        return v;
    };

    std::uint64_t node_budget =
        budget.node_limit == UINT64_MAX ? UINT64_MAX : budget.node_limit;
    std::uint64_t nodes_used = 0;
    std::uint64_t max_iters =
        budget.node_limit == UINT64_MAX ? 300 : UINT64_MAX;

    std::vector<long long> cur = random_set();
    WitnessedValue cur_phi = integer_phi(IntSet::of(cur));
    nodes_used += cur_phi.nodes;
    out.best_set = cur;
    out.phi_value = cur_phi;
    out.trace.emplace_back(0, cur_phi.value);

    for (std::uint64_t it = 1; it <= max_iters && nodes_used < node_budget; ++it) {
        std::vector<long long> cand;
        if (strategy == "random") {
            cand = random_set();
        } else {
            cand = cur;
            std::size_t i = std::size_t(rng.below(std::uint64_t(n)));
            long long x;
            do {
                x = (long long)rng.below(std::uint64_t(height)) + 1;
            } while (std::find(cand.begin(), cand.end(), x) != cand.end());
            cand[i] = x;
            std::sort(cand.begin(), cand.end());
        }
        WitnessedValue v = integer_phi(IntSet::of(cand));
        nodes_used += v.nodes;
        out.iterations = it;
        if (v.value <= cur_phi.value) {  // accept sideways moves
            cur = cand;
            cur_phi = v;
        }
        if (v.value < out.phi_value.value) {
            out.best_set = cand;
            out.phi_value = v;
            out.trace.emplace_back(it, v.value);
        }
    }
    return out;
}

}  // namespace sumfree
