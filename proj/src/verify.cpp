#include "sumfree/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "sumfree/constructions.hpp"
#include "sumfree/rng.hpp"

namespace sumfree {
namespace {

std::vector<long long> as_longs(const GroupSet& s) {
    std::vector<long long> v;
    for (auto e : s.elements()) v.push_back((long long)e);
    return v;
}

// phi(A) = 1 iff A is nonempty and every sum of two distinct members stays in A
bool is_phi_one(const GroupSpec& g, const GroupSet& A) {
    if (A.empty()) return false;
    auto elems = A.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (!A.contains(g.add(elems[i], elems[j]))) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            if (out.empty() || out.back() != d) out.push_back(d);
            n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

bool family_lex_less(const std::vector<Subgroup>& a, const std::vector<Subgroup>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i].order != b[i].order) return a[i].order < b[i].order;
        if (a[i].elements != b[i].elements)
            return a[i].elements.bits().lex_less(b[i].elements.bits());
    }
    return a.size() < b.size();
}

std::vector<Subgroup> canonical_family(std::vector<Subgroup> fam) {
    std::sort(fam.begin(), fam.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.order != y.order) return x.order < y.order;
        return x.elements.bits().lex_less(y.elements.bits());
    });
    return fam;
}

}  // namespace

const char* phi1_kind_name(Phi1Case::Kind k) {
    switch (k) {
        case Phi1Case::FullSubgroup: return "full_subgroup";
        case Phi1Case::TwoTorsionMinusZero: return "two_torsion_minus_zero";
        case Phi1Case::Singleton: return "singleton";
        case Phi1Case::PairWithZero: return "pair_with_zero";
        case Phi1Case::SymmetricTriple: return "symmetric_triple";
        case Phi1Case::NotPhi1: return "not_phi1";
    }
    return "?";
}

Phi1Case classify_phi1(const GroupSpec& g, const GroupSet& A) {
    if (A.empty()) throw Error(Error::Invalid, "classify_phi1: empty set");
    if (is_subgroup(g, A)) return {Phi1Case::FullSubgroup, 0};

    if (!A.contains(0)) {
        bool two_torsion = true;
        for (auto a : A.elements())
            if (g.add(a, a) != 0) { two_torsion = false; break; }
        if (two_torsion) {
            GroupSet h = A;
            h.insert(0);
            if (is_subgroup(g, h)) return {Phi1Case::TwoTorsionMinusZero, 0};
        }
    }
    if (A.card() == 1) return {Phi1Case::Singleton, A.elements()[0]};
    if (A.card() == 2 && A.contains(0)) {
        auto elems = A.elements();
        return {Phi1Case::PairWithZero, elems[0] == 0 ? elems[1] : elems[0]};
    }
    if (A.card() == 3 && A.contains(0)) {
        std::vector<std::uint64_t> rest;
        for (auto a : A.elements())
            if (a != 0) rest.push_back(a);
        if (rest.size() == 2 && g.neg(rest[0]) == rest[1])
            return {Phi1Case::SymmetricTriple, rest[0]};
    }
    return {Phi1Case::NotPhi1, 0};
}

Phi1Report verify_phi1_equivalence(const GroupSpec& g, const SolverBudget& budget) {
    if (g.order() > 22)
        throw Error(Error::Capped, "verify_phi1_equivalence: 2^|G| enumeration infeasible");
    Phi1Report rep;
    std::uint64_t total = (std::uint64_t{1} << g.order()) - 1;
    rep.total = total;
    for (std::uint64_t mask = 1; mask <= total; ++mask) {
        if (rep.checked >= budget.node_limit) { rep.complete = false; break; }
        GroupSet a(g.order());
        for (std::uint64_t e = 0; e < g.order(); ++e)
            if ((mask >> e) & 1) a.insert(e);
        bool classified = classify_phi1(g, a).kind != Phi1Case::NotPhi1;
        bool actual = is_phi_one(g, a);
        ++rep.checked;
        if (classified != actual)
            rep.violations.push_back({a.elements(), classified, actual});
    }
    return rep;
}

const char* gr_case_name(int case_tag) {
    switch (case_tag) {
        case 1: return "i";
        case 2: return "ii";
        case 3: return "iii";
    }
    return "?";
}

DensityPrediction gr_density(const GroupSpec& g) {
    if (g.order() < 2) throw Error(Error::Invalid, "gr_density: |G| must be >= 2");
    // smallest prime divisor congruent to 2 mod 3, if any
    for (auto p : prime_factors(g.order()))
        if (p % 3 == 2)
            return {1, Rational((long long)(p) + 1, 3 * (long long)(p)), p};
    if (g.order() % 3 == 0) return {2, Rational(1, 3), 0};
    std::uint64_t m = g.exponent();
    return {3, Rational((long long)(m) - 1, 3 * (long long)(m)), m};
}

GrReport verify_gr(const GroupSpec& g, const SolverBudget& budget) {
    GrReport rep{gr_density(g), Rational(0, 1), {}, false};
    rep.predicted = rep.prediction.h * Rational::of((long long)g.order());
    rep.measured = max_sum_free(g, budget);
    rep.equal = rep.measured.optimal &&
                Rational::of((long long)rep.measured.value) == rep.predicted;
    return rep;
}

CoverReport cover_search(const GroupSpec& g, const GroupSet& A, int k,
                         const SolverBudget& budget) {
    if (k < 1) throw Error(Error::Invalid, "cover_search: k must be >= 1");
    if (!phi_at_most(Ambient::finite(g), as_longs(A), k))
        throw Error(Error::Invalid, "cover_search: phi(A) > k");

    auto all = subgroups(g);
    // candidates that meet A, densest first
    std::vector<const Subgroup*> cands;
    for (const auto& h : all)
        if (A.intersects(h.elements)) cands.push_back(&h);
    std::sort(cands.begin(), cands.end(), [&](const Subgroup* x, const Subgroup* y) {
        Rational dx((long long)(set_intersect(A, x->elements).card()), (long long)(x->order));
        Rational dy((long long)(set_intersect(A, y->elements).card()), (long long)(y->order));
        if (!(dx == dy)) return dy < dx;
        if (x->order != y->order) return x->order < y->order;
        return x->elements.bits().lex_less(y->elements.bits());
    });

    CoverReport best;
    best.k = k;
    best.residual = A;
    best.c_witness = Rational::of((long long)A.card());
    best.exhaustive = true;
    bool have_best = true;  // m = 0 family is always a candidate

    std::uint64_t nodes = 0;
    bool complete = true;

    std::vector<const Subgroup*> chosen;
    auto consider = [&](const GroupSet& residual, const Rational& maxratio) {
        Rational c = std::max(Rational::of((long long)residual.card()), maxratio);
        std::vector<Subgroup> fam;
        for (auto* h : chosen) fam.push_back(*h);
        fam = canonical_family(std::move(fam));
        // ties on the witness value prefer the smaller residual (a complete
        // cover beats an equally cheap partial one), then fewer subgroups
        bool better = false;
        if (!have_best || c < best.c_witness) better = true;
        else if (c == best.c_witness) {
            if (residual.card() < best.residual.card()) better = true;
            else if (residual.card() == best.residual.card()) {
                if (fam.size() < best.cover.size()) better = true;
                else if (fam.size() == best.cover.size() &&
                         family_lex_less(fam, best.cover))
                    better = true;
            }
        }
        if (better) {
            best.cover = fam;
            best.residual = residual;
            best.c_witness = c;
            have_best = true;
        }
    };

    std::function<void(std::size_t, const GroupSet&, const Rational&)> dfs =
        [&](std::size_t start, const GroupSet& residual, const Rational& maxratio) {
            if (++nodes > budget.node_limit) { complete = false; return; }
            consider(residual, maxratio);
            if (int(chosen.size()) == k) return;
            for (std::size_t i = start; i < cands.size(); ++i) {
                const Subgroup* h = cands[i];
                Rational ratio((long long)(h->order),
                               (long long)(set_intersect(A, h->elements).card()));
                Rational r2 = std::max(maxratio, ratio);
                if (have_best && best.c_witness < r2) continue;
                chosen.push_back(h);
                dfs(i + 1, set_minus(residual, h->elements), r2);
                chosen.pop_back();
                if (!complete) return;
            }
        };
    dfs(0, A, Rational(0, 1));
    best.exhaustive = complete;
    return best;
}

ScanVerdict scan_erdos_question(const GroupSpec& g, int k, std::uint64_t min_size,
                                const SolverBudget& budget, std::uint64_t seed) {
    if (k < 2) throw Error(Error::Invalid, "scan_erdos_question: k must be >= 2");
    ScanVerdict v;
    v.group = g;
    v.k = k;
    v.min_size = min_size;
    v.seed = seed;
    Ambient amb = Ambient::finite(g);

    std::vector<std::uint64_t> neg(g.order());
    for (std::uint64_t e = 0; e < g.order(); ++e) neg[e] = g.neg(e);

    auto zero_sum_free_mask = [&](std::uint64_t mask) {
        for (std::uint64_t e = 0; e < g.order(); ++e)
            if (((mask >> e) & 1) && ((mask >> neg[e]) & 1)) return false;
        return true;
    };
    auto check_candidate = [&](const std::vector<long long>& elems) {
        ++v.candidates_checked;
        if (!phi_at_most(amb, elems, k - 1)) return;
        // independent re-verification of all three conditions
        GroupSet a(g.order());
        for (auto e : elems) a.insert(std::uint64_t(e));
        if (a.card() < min_size) return;
        if (zero_sum_pair(g, a).has_value()) return;
        auto pv = phi(amb, elems);
        if (!pv.optimal || pv.value >= std::uint64_t(k)) return;
        v.counterexamples.push_back(a.elements());
    };

    v.exhaustive = g.order() <= 22;
    if (v.exhaustive) {
        std::uint64_t total = std::uint64_t{1} << g.order();
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            if (v.subsets_considered >= budget.node_limit) {
                v.complete = false;
                break;
            }
            ++v.subsets_considered;
            if (std::uint64_t(std::popcount(mask)) < min_size) continue;
            if (!zero_sum_free_mask(mask)) continue;
            std::vector<long long> elems;
            for (std::uint64_t e = 0; e < g.order(); ++e)
                if ((mask >> e) & 1) elems.push_back((long long)e);
            check_candidate(elems);
        }
    } else {
        // seeded sampling plus the explicit counterexample families
        SplitMix64 rng(seed);
        std::uint64_t samples =
            budget.node_limit == UINT64_MAX ? 20000 : budget.node_limit;
        for (std::uint64_t s = 0; min_size <= g.order() && s < samples; ++s) {
            ++v.subsets_considered;
            std::uint64_t size = min_size + rng.below(g.order() - min_size + 1);
            GroupSet a(g.order());
            while (a.card() < size) a.insert(rng.below(g.order()));
            if (a.card() < min_size) continue;
            if (zero_sum_pair(g, a).has_value()) continue;
            check_candidate(as_longs(a));
        }
        // known constructions that live in this group
        const auto& f = g.factors();
        if (f.size() == 1 && (f[0] & (f[0] - 1)) == 0 && f[0] >= 16) {
            int n = std::countr_zero(f[0]);
            auto c = power_of_two_counterexample(n);
            ++v.subsets_considered;
            if (c.set.card() >= min_size && !zero_sum_pair(g, c.set).has_value())
                check_candidate(as_longs(c.set));
        }
        if (!f.empty() && ((f[0] + 1) & f[0]) == 0 && f[0] >= 7) {
            int kk = std::countr_zero(f[0] + 1);
            GroupSpec h = GroupSpec::from_factors(
                std::vector<std::uint64_t>(f.begin() + 1, f.end()));
            try {
                auto c = mersenne_counterexample(kk, h);
                ++v.subsets_considered;
                if (c.set.card() >= min_size &&
                    !zero_sum_pair(g, c.set).has_value())
                    check_candidate(as_longs(c.set));
            } catch (const Error&) {
                // 2^k - 1 composite; nothing to add
            }
        }
    }
    return v;
}

MinFResult min_f_search(const GroupSpec& g, std::uint64_t n,
                        const SolverBudget& budget, std::uint64_t seed) {
    if (n > g.order())
        throw Error(Error::Invalid, "min_f_search: n exceeds |G|");
    MinFResult out;
    out.minimizer = GroupSet(g.order());
    if (n == 0) return out;

    Ambient amb = Ambient::finite(g);
    // (|G| choose n) if small enough for full enumeration
    unsigned long long combos = 1;
    bool small = true;
    for (std::uint64_t i = 0; i < n; ++i) {
        combos = combos * (g.order() - i) / (i + 1);
        if (combos > 2000000) { small = false; break; }
    }

    auto eval = [&](const std::vector<long long>& elems) {
        ++out.candidates;
        return f_value(amb, elems, budget);
    };

    if (small) {
        std::vector<std::uint64_t> idx(n);
        for (std::uint64_t i = 0; i < n; ++i) idx[i] = i;
        bool first = true;
        while (true) {
            std::vector<long long> elems(idx.begin(), idx.end());
            auto fv = eval(elems);
            if (first || fv.value < out.f.value) {
                out.f = fv;
                out.minimizer = GroupSet::of(g.order(), {idx.begin(), idx.end()});
                first = false;
            }
            // next combination in lexicographic order
            std::size_t i = n;
            while (i-- > 0) {
                if (idx[i] + (n - i) < g.order()) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) { i = SIZE_MAX; break; }
            }
            if (i == SIZE_MAX) break;
        }
        out.exhaustive = true;
        return out;
    }

    SplitMix64 rng(seed);
    std::uint64_t iters = budget.node_limit == UINT64_MAX ? 200 : budget.node_limit;
    GroupSet cur(g.order());
    while (cur.card() < n) cur.insert(rng.below(g.order()));
    auto cur_f = eval(as_longs(cur));
    out.f = cur_f;
    out.minimizer = cur;
    for (std::uint64_t it = 0; it < iters; ++it) {
        GroupSet cand = cur;
        auto elems = cand.elements();
        cand.erase(elems[rng.below(elems.size())]);
        while (cand.card() < n) cand.insert(rng.below(g.order()));
        auto fv = eval(as_longs(cand));
        if (fv.value <= cur_f.value) {
            cur = cand;
            cur_f = fv;
        }
        if (fv.value < out.f.value) {
            out.f = fv;
            out.minimizer = cand;
        }
    }
    out.exhaustive = false;
    return out;
}

}  // namespace sumfree
