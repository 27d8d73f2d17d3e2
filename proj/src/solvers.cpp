#include "sumfree/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "sumfree/bitset.hpp"

namespace sumfree {
namespace {

constexpr std::size_t kMaxSolverElems = 4096;

// sum(i,j) = position of a_i + a_j inside A, or -1 when the sum leaves A
struct SumTable {
    int n = 0;
    std::vector<int> s;
    int sum(int i, int j) const { return s[std::size_t(i) * n + j]; }
};

SumTable make_sum_table(const Ambient& amb, const std::vector<long long>& A) {
    SumTable st;
    st.n = int(A.size());
    if (A.size() > kMaxSolverElems)
        throw Error(Error::Capped, "set too large for the exact solver");
    st.s.assign(A.size() * A.size(), -1);
    std::unordered_map<long long, int> pos;
    pos.reserve(A.size() * 2);
    for (std::size_t i = 0; i < A.size(); ++i) pos[A[i]] = int(i);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = i; j < A.size(); ++j) {
            long long v = amb.add(A[i], A[j]);
            auto it = pos.find(v);
            int k = it == pos.end() ? -1 : it->second;
            st.s[i * A.size() + j] = k;
            st.s[j * A.size() + i] = k;
        }
    return st;
}

struct Ticker {
    std::uint64_t nodes = 0;
    std::uint64_t limit = UINT64_MAX;
    std::chrono::steady_clock::time_point deadline{};
    bool timed = false;
    bool exhausted = false;

    explicit Ticker(const SolverBudget& b) : limit(b.node_limit) {
        if (b.time_limit_seconds > 0) {
            timed = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(b.time_limit_seconds));
        }
    }
    // false once the budget is gone
    bool tick() {
        if (exhausted) return false;
        if (++nodes > limit) { exhausted = true; return false; }
        if (timed && (nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            exhausted = true;
            return false;
        }
        return true;
    }
};

// ---------------------------------------------------------------------------
// maximum independent set engine (phi, strong_f, phi_at_most)

struct MisCtx {
    int n;
    std::vector<Bitset> adj;     // symmetric, no self loops
    std::vector<Bitset> nonadj;  // complement minus self
    Ticker tick;

    int best = -1;
    Bitset bestset;

    MisCtx(int n_, const SolverBudget& b) : n(n_), tick(b), bestset(std::size_t(n_)) {}

    void finish_adj() {
        nonadj.assign(std::size_t(n), Bitset(std::size_t(n)));
        for (int v = 0; v < n; ++v) {
            for (int u = 0; u < n; ++u)
                if (u != v && !adj[std::size_t(v)].test(std::size_t(u)))
                    nonadj[std::size_t(v)].set(std::size_t(u));
        }
    }

    // greedy clique cover of P: each class is a clique, so it contributes at
    // most one vertex to any independent set; #classes bounds the MIS above
    int color_bound(const Bitset& P) const {
        std::vector<Bitset> classes;
        for (int v = P.find_first(); v != -1; v = P.find_next(std::size_t(v) + 1)) {
            bool placed = false;
            for (auto& c : classes) {
                if (c.is_subset_of(adj[std::size_t(v)])) {
                    c.set(std::size_t(v));
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                classes.emplace_back(std::size_t(n));
                classes.back().set(std::size_t(v));
            }
        }
        return int(classes.size());
    }

    int pick_branch(const Bitset& P) const {
        int bestv = -1;
        std::size_t bestdeg = 0;
        for (int v = P.find_first(); v != -1; v = P.find_next(std::size_t(v) + 1)) {
            std::size_t d = (adj[std::size_t(v)] & P).count();
            if (bestv == -1 || d > bestdeg) { bestv = v; bestdeg = d; }
        }
        return bestv;
    }

    void search_max(const Bitset& P, int cur, Bitset& curset) {
        if (cur > best) { best = cur; bestset = curset; }
        if (P.none()) return;
        if (!tick.tick()) return;
        if (cur + int(P.count()) <= best) return;
        if (cur + color_bound(P) <= best) return;
        int v = pick_branch(P);
        Bitset inc = P & nonadj[std::size_t(v)];
        curset.set(std::size_t(v));
        search_max(inc, cur + 1, curset);
        curset.reset(std::size_t(v));
        Bitset exc = P;
        exc.reset(std::size_t(v));
        search_max(exc, cur, curset);
    }

    // is there an independent set of size target inside P (plus cur chosen)?
    bool can_reach(const Bitset& P, int cur, int target) {
        if (cur >= target) return true;
        if (!tick.tick()) return false;
        int room = target - cur;
        if (int(P.count()) < room) return false;
        if (color_bound(P) < room) return false;
        int v = pick_branch(P);
        Bitset inc = P & nonadj[std::size_t(v)];
        if (can_reach(inc, cur + 1, target)) return true;
        if (tick.exhausted) return false;
        Bitset exc = P;
        exc.reset(std::size_t(v));
        return can_reach(exc, cur, target);
    }
};

// adjacency for the sum-avoiding graph on A: edge {i,j} when a_i + a_j is in A
void fill_phi_adjacency(MisCtx& ctx, const SumTable& st) {
    ctx.adj.assign(std::size_t(ctx.n), Bitset(std::size_t(ctx.n)));
    for (int i = 0; i < ctx.n; ++i)
        for (int j = i + 1; j < ctx.n; ++j)
            if (st.sum(i, j) != -1) {
                ctx.adj[std::size_t(i)].set(std::size_t(j));
                ctx.adj[std::size_t(j)].set(std::size_t(i));
            }
    ctx.finish_adj();
}

WitnessedValue mis_solve(MisCtx& ctx, const Bitset& allowed,
                         const std::vector<long long>& A) {
    Bitset curset{std::size_t(ctx.n)};
    ctx.best = 0;
    ctx.search_max(allowed, 0, curset);
    WitnessedValue out;
    out.value = std::uint64_t(ctx.best);
    bool value_proved = !ctx.tick.exhausted;

    // lexicographically least witness by greedy re-decision
    Bitset witness{std::size_t(ctx.n)};
    bool lex_ok = value_proved;
    if (lex_ok) {
        Bitset P = allowed;
        int chosen = 0;
        for (int v = 0; v < ctx.n && chosen < ctx.best; ++v) {
            if (!P.test(std::size_t(v))) continue;
            Bitset inc = P & ctx.nonadj[std::size_t(v)];
            if (ctx.can_reach(inc, chosen + 1, ctx.best)) {
                witness.set(std::size_t(v));
                ++chosen;
                P = inc;
            } else {
                if (ctx.tick.exhausted) { lex_ok = false; break; }
                P.reset(std::size_t(v));
            }
        }
        if (chosen < ctx.best) lex_ok = false;
    }
    const Bitset& w = lex_ok ? witness : ctx.bestset;
    for (auto i : w.elements()) out.witness.push_back(A[i]);
    out.optimal = value_proved && lex_ok;
    out.nodes = ctx.tick.nodes;
    return out;
}

// ---------------------------------------------------------------------------
// sum-free engine (f, strong variant via MIS instead): branch over elements
// in index order, tracking the sums of chosen pairs as a forbidden bitmap

struct SfCtx {
    const SumTable& st;
    Ticker tick;
    int best = -1;
    Bitset bestset;

    SfCtx(const SumTable& st_, const SolverBudget& b)
        : st(st_), tick(b), bestset(std::size_t(st_.n)) {}

    // can v join `chosen` without breaking (B+B) cap B = empty?
    bool can_take(int v, const Bitset& chosen, const Bitset& forbidden) const {
        if (forbidden.test(std::size_t(v))) return false;
        int dv = st.sum(v, v);
        if (dv != -1 && (dv == v || chosen.test(std::size_t(dv)))) return false;
        for (int u = chosen.find_first(); u != -1;
             u = chosen.find_next(std::size_t(u) + 1)) {
            int s = st.sum(u, v);
            if (s != -1 && (s == v || chosen.test(std::size_t(s)))) return false;
        }
        return true;
    }

    void apply_take(int v, const Bitset& chosen, Bitset& forbidden) const {
        int dv = st.sum(v, v);
        if (dv != -1) forbidden.set(std::size_t(dv));
        for (int u = chosen.find_first(); u != -1;
             u = chosen.find_next(std::size_t(u) + 1)) {
            int s = st.sum(u, v);
            if (s != -1) forbidden.set(std::size_t(s));
        }
    }

    // Greedy clique cover on the pairwise-conflict graph of the candidates:
    // {x,y} conflict when x+y lands in the chosen set or inside {x,y} itself.
    // Each class is a conflict clique, so it yields at most one element.
    int conflict_color_bound(const Bitset& cands, const Bitset& chosen) const {
        std::vector<std::vector<int>> classes;
        classes.reserve(8);
        for (int v = cands.find_first(); v != -1;
             v = cands.find_next(std::size_t(v) + 1)) {
            bool placed = false;
            for (auto& cls : classes) {
                bool all_clash = true;
                for (int u : cls) {
                    bool clash = false;
                    int s = st.sum(u, v);
                    if (s != -1 && (s == u || s == v || chosen.test(std::size_t(s))))
                        clash = true;
                    else if (st.sum(u, u) == v || st.sum(v, v) == u)
                        clash = true;
                    if (!clash) { all_clash = false; break; }
                }
                if (all_clash) { cls.push_back(v); placed = true; break; }
            }
            if (!placed) classes.push_back({v});
        }
        return int(classes.size());
    }

    void search_max(int pos, Bitset& chosen, const Bitset& forbidden, int cnt) {
        if (cnt > best) { best = cnt; bestset = chosen; }
        if (pos >= st.n) return;
        if (!tick.tick()) return;
        Bitset cands{std::size_t(st.n)};
        for (int v = pos; v < st.n; ++v)
            if (!forbidden.test(std::size_t(v))) cands.set(std::size_t(v));
        int avail = int(cands.count());
        if (cnt + avail <= best) return;
        if (avail > 2 && cnt + conflict_color_bound(cands, chosen) <= best) return;
        int v = cands.find_first();
        if (v == -1) return;
        if (can_take(v, chosen, forbidden)) {
            Bitset fb = forbidden;
            apply_take(v, chosen, fb);
            chosen.set(std::size_t(v));
            search_max(v + 1, chosen, fb, cnt + 1);
            chosen.reset(std::size_t(v));
        }
        search_max(v + 1, chosen, forbidden, cnt);
    }

    bool can_reach(int pos, Bitset& chosen, const Bitset& forbidden, int cnt,
                   int target) {
        if (cnt >= target) return true;
        if (pos >= st.n) return false;
        if (!tick.tick()) return false;
        Bitset cands{std::size_t(st.n)};
        for (int v = pos; v < st.n; ++v)
            if (!forbidden.test(std::size_t(v))) cands.set(std::size_t(v));
        int avail = int(cands.count());
        if (cnt + avail < target) return false;
        if (avail > 2 && cnt + conflict_color_bound(cands, chosen) < target)
            return false;
        int v = cands.find_first();
        if (v == -1) return false;
        if (can_take(v, chosen, forbidden)) {
            Bitset fb = forbidden;
            apply_take(v, chosen, fb);
            chosen.set(std::size_t(v));
            bool ok = can_reach(v + 1, chosen, fb, cnt + 1, target);
            chosen.reset(std::size_t(v));
            if (ok) return true;
            if (tick.exhausted) return false;
        }
        return can_reach(v + 1, chosen, forbidden, cnt, target);
    }
};

WitnessedValue sf_solve(const SumTable& st, const std::vector<long long>& A,
                        const SolverBudget& budget) {
    SfCtx ctx(st, budget);
    Bitset chosen{std::size_t(st.n)}, forbidden{std::size_t(st.n)};
    ctx.best = 0;
    ctx.search_max(0, chosen, forbidden, 0);
    WitnessedValue out;
    out.value = std::uint64_t(ctx.best);
    bool value_proved = !ctx.tick.exhausted;

    Bitset witness{std::size_t(st.n)}, wfb{std::size_t(st.n)};
    bool lex_ok = value_proved;
    if (lex_ok) {
        int cnt = 0;
        for (int v = 0; v < st.n && cnt < ctx.best; ++v) {
            if (!ctx.can_take(v, witness, wfb)) continue;
            Bitset fb = wfb;
            ctx.apply_take(v, witness, fb);
            witness.set(std::size_t(v));
            if (ctx.can_reach(v + 1, witness, fb, cnt + 1, ctx.best)) {
                wfb = fb;
                ++cnt;
            } else {
                witness.reset(std::size_t(v));
                if (ctx.tick.exhausted) { lex_ok = false; break; }
            }
        }
        if (cnt < ctx.best) lex_ok = false;
    }
    const Bitset& w = lex_ok ? witness : ctx.bestset;
    for (auto i : w.elements()) out.witness.push_back(A[i]);
    out.optimal = value_proved && lex_ok;
    out.nodes = ctx.tick.nodes;
    return out;
}

std::vector<long long> canonical(std::vector<long long> A) {
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    return A;
}

}  // namespace

WitnessedValue phi(const Ambient& amb, const std::vector<long long>& A_in,
                   const SolverBudget& budget) {
    auto A = canonical(A_in);
    if (A.empty()) return {};
    SumTable st = make_sum_table(amb, A);
    MisCtx ctx(st.n, budget);
    fill_phi_adjacency(ctx, st);
    Bitset all{std::size_t(st.n)};
    for (int i = 0; i < st.n; ++i) all.set(std::size_t(i));
    return mis_solve(ctx, all, A);
}

bool phi_at_most(const Ambient& amb, const std::vector<long long>& A_in, int k) {
    if (k < 0) throw Error(Error::Invalid, "phi_at_most: k must be >= 0");
    auto A = canonical(A_in);
    if (int(A.size()) <= k) return true;  // phi(A) <= |A|
    if (k == 0) return A.empty();         // singletons are sum-avoiding
    SumTable st = make_sum_table(amb, A);
    MisCtx ctx(st.n, SolverBudget{});
    fill_phi_adjacency(ctx, st);
    Bitset all{std::size_t(st.n)};
    for (int i = 0; i < st.n; ++i) all.set(std::size_t(i));
    return !ctx.can_reach(all, 0, k + 1);
}

WitnessedValue f_value(const Ambient& amb, const std::vector<long long>& A_in,
                       const SolverBudget& budget) {
    auto A = canonical(A_in);
    if (A.empty()) return {};
    SumTable st = make_sum_table(amb, A);
    return sf_solve(st, A, budget);
}

WitnessedValue strong_f(const Ambient& amb, const std::vector<long long>& A_in,
                        const SolverBudget& budget) {
    auto A = canonical(A_in);
    if (A.empty()) return {};
    SumTable st = make_sum_table(amb, A);
    MisCtx ctx(st.n, budget);
    fill_phi_adjacency(ctx, st);
    Bitset allowed{std::size_t(st.n)};
    for (int i = 0; i < st.n; ++i)
        if (st.sum(i, i) == -1) allowed.set(std::size_t(i));  // 2b must avoid A
    return mis_solve(ctx, allowed, A);
}

WitnessedValue max_sum_free(const GroupSpec& g, const SolverBudget& budget) {
    if (g.order() > 128)
        throw Error(Error::Capped, "group too large for exact max-sum-free");
    std::vector<long long> A;
    A.reserve(g.order());
    for (std::uint64_t e = 0; e < g.order(); ++e) A.push_back((long long)e);
    return f_value(Ambient::finite(g), A, budget);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> zero_sum_pair(
    const GroupSpec& g, const GroupSet& A) {
    for (auto a : A.elements()) {
        std::uint64_t b = g.neg(a);
        if (A.contains(b)) return std::make_pair(a, b);
    }
    return std::nullopt;
}

}  // namespace sumfree
