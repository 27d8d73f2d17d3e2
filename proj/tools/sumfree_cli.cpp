// Command-line front end; talks to the sumfree shared library through its
// C API and handles file IO, manifests and exit codes.

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumfree/sumfree_c.h"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string group;
    std::string set_inline;
    std::string set_file;
    std::uint64_t budget_nodes = 0;
    double budget_seconds = 0.0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string format = "json";
    std::string out_dir;
    bool strict = false;

    // per-subcommand numerics
    std::int64_t n = -1;
    std::int64_t k = -1;
    std::int64_t min_size = -1;
    std::int64_t max_order = -1;
    std::int64_t x = -1;
    std::string h_group;
    std::string subs;
    std::string extras;
    std::string h_gens;
    std::string mask;
    std::string strategy = "descent";
    std::string kind;  // construct sub-kind
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--group", o.group, "group spec, e.g. Z8xZ3");
    cmd->add_option("--set", o.set_inline, "inline JSON set, e.g. [1,2,4]");
    cmd->add_option("--set-file", o.set_file, "path to a JSON set file");
    cmd->add_option("--budget-nodes", o.budget_nodes, "solver node budget");
    cmd->add_option("--budget-seconds", o.budget_seconds, "solver time budget");
    cmd->add_option("--seed", o.seed, "RNG seed for sampled modes")
        ->each([&](const std::string&) { o.seed_given = true; });
    cmd->add_option("--format", o.format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out-dir", o.out_dir, "results directory");
    cmd->add_flag("--strict", o.strict, "reject out-of-range set elements");
}

Json parse_json_arg(const std::string& text, const char* what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw CLI::ValidationError(std::string(what) + ": malformed JSON");
    return j;
}

Json build_request(const std::string& command, const Options& o) {
    Json req;
    req["command"] = command;
    if (!o.kind.empty()) req["kind"] = o.kind;
    if (!o.group.empty()) req["group"] = o.group;
    if (!o.set_inline.empty())
        req["set"] = parse_json_arg(o.set_inline, "--set");
    else if (!o.set_file.empty()) {
        std::ifstream in(o.set_file);
        if (!in) throw CLI::ValidationError("--set-file: cannot open " + o.set_file);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        req["set"] = parse_json_arg(text, "--set-file");
    }
    if (o.n >= 0) req["n"] = o.n;
    if (o.k >= 0) req["k"] = o.k;
    if (o.min_size >= 0) req["min_size"] = o.min_size;
    if (o.max_order >= 0) req["max_order"] = o.max_order;
    if (!o.h_group.empty()) req["h_group"] = o.h_group;
    if (!o.subs.empty()) req["subs"] = parse_json_arg(o.subs, "--subs");
    if (!o.extras.empty()) req["extras"] = parse_json_arg(o.extras, "--extras");
    if (!o.h_gens.empty()) req["h_gens"] = parse_json_arg(o.h_gens, "--h-gens");
    if (o.x >= 0) req["x"] = o.x;
    if (!o.mask.empty()) req["mask"] = parse_json_arg(o.mask, "--mask");
    if (command == "min-phi") req["strategy"] = o.strategy;
    if (o.budget_nodes > 0 || o.budget_seconds > 0) {
        Json b;
        if (o.budget_nodes > 0) b["nodes"] = o.budget_nodes;
        if (o.budget_seconds > 0) b["seconds"] = o.budget_seconds;
        req["budget"] = b;
    }
    if (o.seed_given) req["seed"] = o.seed;
    if (o.strict) req["strict"] = true;
    return req;
}

void print_summary(const Json& rep) {
    for (const auto& [key, val] : rep.items()) {
        if (key == "inputs") continue;
        if (val.is_primitive())
            std::cout << "  " << key << ": " << val.dump() << "\n";
        else if (val.is_array() && val.size() <= 40)
            std::cout << "  " << key << ": " << val.dump() << "\n";
        else if (val.is_array())
            std::cout << "  " << key << ": [" << val.size() << " entries]\n";
    }
}

int run(const std::string& command, Options& o, const std::vector<std::string>& argv) {
    Json req = build_request(command, o);

    char* report_text = nullptr;
    sf_status st = sf_run_json(req.dump().c_str(), &report_text);
    if (st != SF_OK) {
        std::cerr << "error: " << sf_last_error() << "\n";
        return 2;
    }
    Json rep = Json::parse(report_text);

    std::string out_dir = o.out_dir;
    if (out_dir.empty()) {
        const char* env = std::getenv("SUMFREE_OUT_DIR");
        out_dir = env ? env : "results";
    }
    fs::create_directories(out_dir);

    std::string base = command;
    if (command == "construct") base += "-" + req["kind"].get<std::string>();
    std::string report_path =
        (fs::path(out_dir) / (base + ".report." + o.format)).string();
    {
        std::ofstream out(report_path);
        if (o.format == "csv") {
            char* csv = nullptr;
            if (sf_report_csv(report_text, &csv) != SF_OK) {
                std::cerr << "error: " << sf_last_error() << "\n";
                sf_string_free(report_text);
                return 2;
            }
            out << csv;
            sf_string_free(csv);
        } else {
            out << rep.dump(2) << "\n";
        }
    }
    sf_string_free(report_text);

    // reproducibility record; the timestamp is informational only
    Json manifest;
    manifest["artifact_version"] = sf_version();
    manifest["argv"] = argv;
    manifest["request"] = req;
    manifest["outputs"] = Json::array({report_path});
    {
        std::time_t t = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
        manifest["timestamp"] = buf;
    }
    std::string manifest_path =
        (fs::path(out_dir) / (base + ".manifest.json")).string();
    std::ofstream(manifest_path) << manifest.dump(2) << "\n";

    std::cout << command << " -> " << rep["verdict"].get<std::string>() << "\n";
    print_summary(rep);
    std::cout << "report:   " << report_path << "\n";
    std::cout << "manifest: " << manifest_path << "\n";

    std::string verdict = rep["verdict"].get<std::string>();
    if (verdict == "ok") return 0;
    if (verdict == "claim_failed") return 1;
    if (verdict == "partial") return 3;
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sum-free / sum-avoiding set computations"};
    app.require_subcommand(1);
    Options o;

    const char* simple[] = {"phi",          "f",           "strong-f",
                            "max-sumfree",  "zero-sum",    "classify-phi1",
                            "verify-phi1",  "gr-density",  "erdos-third",
                            "turan-greedy"};
    for (const char* name : simple) add_common(app.add_subcommand(name), o);

    auto* vgr = app.add_subcommand("verify-gr");
    add_common(vgr, o);
    vgr->add_option("--max-order", o.max_order, "check all groups of order 2..N");

    auto* cov = app.add_subcommand("cover-search");
    add_common(cov, o);
    cov->add_option("--k", o.k)->required();

    auto* scan = app.add_subcommand("scan-erdos");
    add_common(scan, o);
    scan->add_option("--k", o.k)->required();
    scan->add_option("--min-size", o.min_size)->required();

    auto* minf = app.add_subcommand("min-f");
    add_common(minf, o);
    minf->add_option("--n", o.n)->required();

    auto* minphi = app.add_subcommand("min-phi");
    add_common(minphi, o);
    minphi->add_option("--n", o.n)->required();
    minphi->add_option("--strategy", o.strategy)->check(CLI::IsMember({"descent", "random"}));

    auto* con = app.add_subcommand("construct");
    con->require_subcommand(1);
    auto* p2 = con->add_subcommand("power2");
    add_common(p2, o);
    p2->add_option("--n", o.n)->required();
    auto* mer = con->add_subcommand("mersenne");
    add_common(mer, o);
    mer->add_option("--k", o.k)->required();
    mer->add_option("--h-group", o.h_group);
    auto* uni = con->add_subcommand("union");
    add_common(uni, o);
    uni->add_option("--subs", o.subs, "JSON list of generator lists");
    uni->add_option("--extras", o.extras, "JSON set of extra elements");
    auto* trap = con->add_subcommand("coset-trap");
    add_common(trap, o);
    trap->add_option("--h-gens", o.h_gens, "JSON generator list for H")->required();
    trap->add_option("--x", o.x)->required();
    trap->add_option("--mask", o.mask, "JSON subset of the coset x+H");

    CLI11_PARSE(app, argc, argv);

    std::vector<std::string> args(argv, argv + argc);
    for (auto* sub : app.get_subcommands()) {
        std::string name = sub->get_name();
        if (name == "construct") o.kind = sub->get_subcommands().at(0)->get_name();
        try {
            return run(name, o, args);
        } catch (const CLI::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return 2;
}
