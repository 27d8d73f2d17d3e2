#include "sumfree/harness.hpp"

#include <algorithm>
#include <ctime>
#include <sstream>

#include "sumfree/constructions.hpp"
#include "sumfree/integer_line.hpp"
#include "sumfree/verify.hpp"

namespace sumfree {
namespace {

std::optional<GroupSpec> group_of(const Json& req) {
    if (!req.contains("group") || req["group"].is_null()) return std::nullopt;
    return GroupSpec::parse(req["group"].get<std::string>());
}

SolverBudget budget_of(const Json& req) {
    SolverBudget b;
    if (req.contains("budget")) {
        const auto& j = req["budget"];
        if (j.contains("nodes")) b.node_limit = j["nodes"].get<std::uint64_t>();
        if (j.contains("seconds")) b.time_limit_seconds = j["seconds"].get<double>();
    }
    return b;
}

std::uint64_t seed_of(const Json& req) {
    return req.contains("seed") ? req["seed"].get<std::uint64_t>() : 0;
}

long long reduce_mod(long long v, std::uint64_t order, bool strict) {
    if (v >= 0 && std::uint64_t(v) < order) return v;
    if (strict) throw Error(Error::Invalid, "set element out of range (strict)");
    long long m = (long long)order;
    long long r = v % m;
    return r < 0 ? r + m : r;
}

Json witness_json(const std::optional<GroupSpec>& g, const std::vector<long long>& w) {
    return set_to_json(g, w);
}

Json solved_json(const std::optional<GroupSpec>& g, const WitnessedValue& v) {
    Json j;
    j["value"] = v.value;
    j["witness"] = witness_json(g, v.witness);
    j["optimal"] = v.optimal;
    return j;
}

Json rational_json(const Rational& r) { return r.str(); }

Json claims_json(const std::vector<ClaimResult>& results) {
    Json arr = Json::array();
    for (const auto& r : results) {
        Json j;
        j["property"] = claim_kind_name(r.claim.kind);
        switch (r.claim.kind) {
            case ClaimKind::PhiEquals:
            case ClaimKind::PhiAtMost:
            case ClaimKind::Cardinality:
                j["expected"] = r.claim.expected;
                break;
            case ClaimKind::ZeroSumFree:
                j["expected"] = false;  // zero_sum_exists
                break;
            case ClaimKind::SumAvoidingSubset:
            case ClaimKind::MeasurePhiOutsideSubgroup:
                j["subset"] = r.claim.subset;
                break;
            case ClaimKind::MeasurePhi:
                break;
        }
        if (r.has_measured) j["measured"] = r.measured;
        j["holds"] = r.holds;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::vector<std::uint64_t> parse_elements_u64(const Json& arr, const GroupSpec& g,
                                              bool strict) {
    std::vector<std::uint64_t> out;
    for (auto v : load_set(arr, g, strict)) out.push_back(std::uint64_t(v));
    return out;
}

GroupSet parse_group_set(const Json& arr, const GroupSpec& g, bool strict) {
    return GroupSet::of(g.order(), parse_elements_u64(arr, g, strict));
}

// factorizations of n into non-increasing cyclic factors >= 2
void factorizations(std::uint64_t n, std::uint64_t maxpart,
                    std::vector<std::uint64_t>& cur,
                    std::vector<std::vector<std::uint64_t>>& out) {
    if (n == 1) {
        out.push_back(cur);
        return;
    }
    for (std::uint64_t d = std::min(n, maxpart); d >= 2; --d)
        if (n % d == 0) {
            cur.push_back(d);
            factorizations(n / d, d, cur, out);
            cur.pop_back();
        }
}

Json gr_entry(const GroupSpec& g, const SolverBudget& budget) {
    GrReport rep = verify_gr(g, budget);
    Json j;
    j["group"] = g.name();
    j["case"] = gr_case_name(rep.prediction.case_tag);
    j["h"] = rational_json(rep.prediction.h);
    j["predicted"] = rational_json(rep.predicted);
    j["measured"] = rep.measured.value;
    j["optimal"] = rep.measured.optimal;
    j["equal"] = rep.equal;
    return j;
}

Construction build_construction(const Json& req) {
    std::string kind = req.at("kind").get<std::string>();
    if (kind == "power2") return power_of_two_counterexample(req.at("n").get<int>());
    if (kind == "mersenne") {
        GroupSpec h;  // trivial unless given
        if (req.contains("h_group") && !req["h_group"].is_null())
            h = GroupSpec::parse(req["h_group"].get<std::string>());
        return mersenne_counterexample(req.at("k").get<int>(), h);
    }
    auto g = group_of(req);
    if (!g) throw Error(Error::Invalid, "construct: --group required");
    if (kind == "union") {
        std::vector<Subgroup> subs;
        if (req.contains("subs"))
            for (const auto& gens : req["subs"])
                subs.push_back(generated_subgroup(*g, parse_group_set(gens, *g, false)));
        GroupSet extras(g->order());
        if (req.contains("extras")) extras = parse_group_set(req["extras"], *g, false);
        return subgroup_union(*g, subs, extras);
    }
    if (kind == "coset-trap") {
        Subgroup h = generated_subgroup(*g, parse_group_set(req.at("h_gens"), *g, false));
        std::uint64_t x;
        if (req.at("x").is_array())
            x = g->encode(req["x"].get<std::vector<std::uint64_t>>());
        else
            x = std::uint64_t(reduce_mod(req["x"].get<long long>(), g->order(), false));
        GroupSet mask(g->order());
        if (req.contains("mask")) mask = parse_group_set(req["mask"], *g, false);
        return coset_trap(*g, h, x, mask);
    }
    throw Error(Error::Parse, "construct: unknown kind '" + kind + "'");
}

}  // namespace

std::vector<long long> load_set(const Json& arr, const std::optional<GroupSpec>& g,
                                bool strict) {
    if (!arr.is_array()) throw Error(Error::Parse, "set: expected a JSON array");
    std::vector<long long> out;
    for (const auto& v : arr) {
        if (v.is_array()) {
            if (!g) throw Error(Error::Parse, "set: coordinate arrays need a group");
            auto coords = v.get<std::vector<long long>>();
            if (coords.size() != g->factors().size())
                throw Error(Error::Invalid, "set: coordinate arity mismatch");
            std::vector<std::uint64_t> c;
            for (std::size_t i = 0; i < coords.size(); ++i)
                c.push_back(std::uint64_t(
                    reduce_mod(coords[i], g->factors()[i], strict)));
            out.push_back((long long)g->encode(c));
        } else if (v.is_number_integer()) {
            long long x = v.get<long long>();
            if (g) {
                if (g->factors().size() != 1)
                    throw Error(Error::Invalid,
                                "set: coordinate arity mismatch (group has " +
                                    std::to_string(g->factors().size()) + " factors)");
                x = reduce_mod(x, g->order(), strict);
            }
            out.push_back(x);
        } else {
            throw Error(Error::Parse, "set: elements must be integers or arrays");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Json set_to_json(const std::optional<GroupSpec>& g, const std::vector<long long>& elems) {
    Json arr = Json::array();
    if (g && g->factors().size() > 1) {
        for (auto e : elems) arr.push_back(g->decode(std::uint64_t(e)));
    } else {
        for (auto e : elems) arr.push_back(e);
    }
    return arr;
}

int report_exit_code(const Json& report) {
    std::string v = report.at("verdict").get<std::string>();
    if (v == "ok") return 0;
    if (v == "claim_failed") return 1;
    if (v == "partial") return 3;
    return 2;
}

Json make_manifest(const Json& request, const std::vector<std::string>& argv,
                   const std::vector<std::string>& outputs) {
    Json m;
    m["artifact_version"] = kArtifactVersion;
    m["argv"] = argv;
    m["request"] = request;
    m["outputs"] = outputs;
    m["timestamp"] = []() {
        std::time_t t = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
        return std::string(buf);
    }();
    return m;
}

Json run_request(const Json& req) {
    std::string cmd = req.at("command").get<std::string>();
    auto g = group_of(req);
    SolverBudget budget = budget_of(req);
    bool strict = req.contains("strict") && req["strict"].get<bool>();

    Json rep;
    rep["operation"] = cmd;
    Json inputs;
    if (g) inputs["group"] = g->name();
    for (const char* k : {"set", "n", "k", "min_size", "max_order", "kind",
                          "h_group", "strategy", "subs", "extras", "h_gens", "x",
                          "mask", "budget", "seed"})
        if (req.contains(k)) inputs[k] = req[k];
    rep["inputs"] = inputs;

    auto need_set = [&]() -> std::vector<long long> {
        if (!req.contains("set"))
            throw Error(Error::Parse, cmd + ": a set is required");
        return load_set(req["set"], g, strict);
    };
    auto finish_solver = [&](const WitnessedValue& v) {
        rep.update(solved_json(g, v));
        rep["budget_used"] = Json{{"nodes", v.nodes}};
        rep["verdict"] = v.optimal ? "ok" : "partial";
    };

    if (cmd == "phi" || cmd == "f" || cmd == "strong-f") {
        Ambient amb = g ? Ambient::finite(*g) : Ambient::integers();
        auto A = need_set();
        WitnessedValue v = cmd == "phi"  ? phi(amb, A, budget)
                           : cmd == "f" ? f_value(amb, A, budget)
                                        : strong_f(amb, A, budget);
        finish_solver(v);
    } else if (cmd == "max-sumfree") {
        if (!g) throw Error(Error::Parse, "max-sumfree: --group required");
        finish_solver(max_sum_free(*g, budget));
    } else if (cmd == "zero-sum") {
        if (!g) throw Error(Error::Parse, "zero-sum: --group required");
        GroupSet a = GroupSet::of(g->order(),
                                  parse_elements_u64(req.at("set"), *g, strict));
        auto zs = zero_sum_pair(*g, a);
        rep["exists"] = zs.has_value();
        if (zs) rep["witness"] = Json::array({zs->first, zs->second});
        rep["verdict"] = "ok";
    } else if (cmd == "classify-phi1") {
        if (!g) throw Error(Error::Parse, "classify-phi1: --group required");
        GroupSet a = GroupSet::of(g->order(),
                                  parse_elements_u64(req.at("set"), *g, strict));
        Phi1Case c = classify_phi1(*g, a);
        rep["case"] = phi1_kind_name(c.kind);
        if (c.kind == Phi1Case::Singleton || c.kind == Phi1Case::PairWithZero ||
            c.kind == Phi1Case::SymmetricTriple)
            rep["b"] = c.b;
        rep["verdict"] = "ok";
    } else if (cmd == "verify-phi1") {
        if (!g) throw Error(Error::Parse, "verify-phi1: --group required");
        Phi1Report r = verify_phi1_equivalence(*g, budget);
        rep["total"] = r.total;
        rep["checked"] = r.checked;
        Json viols = Json::array();
        for (const auto& v : r.violations)
            viols.push_back(Json{{"set", v.set},
                                 {"classified_phi1", v.classified_phi1},
                                 {"actual_phi1", v.actual_phi1}});
        rep["violations"] = viols;
        rep["exhaustive"] = r.complete;
        rep["verdict"] = !r.violations.empty() ? "claim_failed"
                         : r.complete         ? "ok"
                                              : "partial";
    } else if (cmd == "gr-density") {
        if (!g) throw Error(Error::Parse, "gr-density: --group required");
        DensityPrediction p = gr_density(*g);
        rep["case"] = gr_case_name(p.case_tag);
        rep["h"] = rational_json(p.h);
        if (p.case_tag == 1) rep["q"] = p.q_or_m;
        if (p.case_tag == 3) rep["m"] = p.q_or_m;
        rep["verdict"] = "ok";
    } else if (cmd == "verify-gr") {
        if (req.contains("max_order")) {
            std::uint64_t maxo = req["max_order"].get<std::uint64_t>();
            Json rows = Json::array();
            bool all_equal = true, all_optimal = true;
            for (std::uint64_t o = 2; o <= maxo; ++o) {
                std::vector<std::vector<std::uint64_t>> fs;
                std::vector<std::uint64_t> cur;
                factorizations(o, o, cur, fs);
                for (auto& f : fs) {
                    Json row = gr_entry(GroupSpec::from_factors(f), budget);
                    all_equal = all_equal && row["equal"].get<bool>();
                    all_optimal = all_optimal && row["optimal"].get<bool>();
                    rows.push_back(std::move(row));
                }
            }
            rep["rows"] = rows;
            rep["verdict"] = all_equal ? "ok" : all_optimal ? "claim_failed" : "partial";
        } else {
            if (!g) throw Error(Error::Parse, "verify-gr: --group or --max-order required");
            Json row = gr_entry(*g, budget);
            bool eq = row["equal"].get<bool>(), opt = row["optimal"].get<bool>();
            rep.update(row);
            rep["verdict"] = eq ? "ok" : opt ? "claim_failed" : "partial";
        }
    } else if (cmd == "cover-search") {
        if (!g) throw Error(Error::Parse, "cover-search: --group required");
        GroupSet a = GroupSet::of(g->order(),
                                  parse_elements_u64(req.at("set"), *g, strict));
        CoverReport r = cover_search(*g, a, req.at("k").get<int>(), budget);
        Json subs = Json::array();
        for (const auto& h : r.cover) subs.push_back(h.elements.elements());
        rep["m"] = r.cover.size();
        rep["subgroups"] = subs;
        rep["residual"] = r.residual.elements();
        rep["c_witness"] = rational_json(r.c_witness);
        rep["exhaustive"] = r.exhaustive;
        rep["verdict"] = r.exhaustive ? "ok" : "partial";
    } else if (cmd == "scan-erdos") {
        if (!g) throw Error(Error::Parse, "scan-erdos: --group required");
        ScanVerdict v = scan_erdos_question(*g, req.at("k").get<int>(),
                                            req.at("min_size").get<std::uint64_t>(),
                                            budget, seed_of(req));
        rep["mode"] = v.exhaustive ? "exhaustive" : "sampled";
        rep["seed"] = v.seed;
        rep["counterexamples"] = v.counterexamples;
        rep["statistics"] = Json{{"subsets_considered", v.subsets_considered},
                                 {"candidates_checked", v.candidates_checked}};
        rep["exhaustive"] = v.exhaustive && v.complete;
        rep["verdict"] = v.complete ? "ok" : "partial";
    } else if (cmd == "min-f") {
        if (!g) throw Error(Error::Parse, "min-f: --group required");
        MinFResult r = min_f_search(*g, req.at("n").get<std::uint64_t>(), budget,
                                    seed_of(req));
        rep["n"] = req["n"];
        rep["f"] = r.f.value;
        rep["minimizer"] = r.minimizer.elements();
        rep["witness"] = witness_json(g, r.f.witness);
        rep["exhaustive"] = r.exhaustive;
        rep["candidates"] = r.candidates;
        rep["verdict"] = "ok";
    } else if (cmd == "construct") {
        Construction c = build_construction(req);
        auto results = verify_claims(c, budget);
        bool all_hold = true;
        for (const auto& r : results) all_hold = all_hold && r.holds;
        rep["name"] = c.name;
        rep["group"] = c.group.name();
        std::vector<long long> elems;
        for (auto e : c.set.elements()) elems.push_back((long long)e);
        rep["set"] = set_to_json(c.group, elems);
        rep["claims"] = claims_json(results);
        rep["all_hold"] = all_hold;
        rep["verdict"] = all_hold ? "ok" : "claim_failed";
    } else if (cmd == "erdos-third") {
        if (g) throw Error(Error::Parse, "erdos-third: integer sets only");
        SweepResult r = erdos_third(IntSet::of(need_set()));
        rep["alpha"] = rational_json(r.alpha);
        rep["count"] = r.count;
        rep["witness"] = r.B.elements();
        rep["verdict"] = "ok";
    } else if (cmd == "turan-greedy") {
        if (g) throw Error(Error::Parse, "turan-greedy: integer sets only");
        GreedyTrace t = turan_greedy(IntSet::of(need_set()));
        rep["vertices"] = t.vertices;
        rep["degrees"] = t.degrees;
        rep["witness"] = t.B;
        rep["caro_wei"] = rational_json(t.caro_wei);
        bool met = Rational::of((long long)t.B.size()) >= t.caro_wei;
        rep["bound_met"] = met;
        rep["negated"] = t.negated;
        rep["verdict"] = met ? "ok" : "claim_failed";
    } else if (cmd == "min-phi") {
        std::string strategy = req.contains("strategy")
                                   ? req["strategy"].get<std::string>()
                                   : "descent";
        MinPhiResult r = min_phi_search(req.at("n").get<int>(), strategy, budget,
                                        seed_of(req));
        rep["n"] = req["n"];
        rep["best_set"] = r.best_set;
        rep["phi"] = r.phi_value.value;
        rep["witness"] = r.phi_value.witness;
        rep["iterations"] = r.iterations;
        Json trace = Json::array();
        for (auto& [it, val] : r.trace)
            trace.push_back(Json::array({it, val}));
        rep["trace"] = trace;
        rep["strategy"] = r.strategy;
        rep["seed"] = r.seed;
        rep["verdict"] = "ok";
    } else {
        throw Error(Error::Parse, "unknown command '" + cmd + "'");
    }
    return rep;
}

std::string report_to_csv(const Json& report) {
    std::ostringstream os;
    if (report.contains("rows")) {
        os << "group,case,predicted,measured,equal\n";
        for (const auto& row : report["rows"])
            os << row["group"].get<std::string>() << ','
               << row["case"].get<std::string>() << ','
               << row["predicted"].get<std::string>() << ','
               << row["measured"].get<std::uint64_t>() << ','
               << (row["equal"].get<bool>() ? "true" : "false") << '\n';
        return os.str();
    }
    // generic flat rendering of the scalar fields
    os << "key,value\n";
    for (const auto& [k, v] : report.items()) {
        if (v.is_primitive()) os << k << ',' << v.dump() << '\n';
    }
    return os.str();
}

}  // namespace sumfree
