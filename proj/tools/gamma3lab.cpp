// gamma3lab: command-line front end.  Subcommands expose the pattern catalog,
// freeness scans, the Hamilton-connectivity oracle, the two closures, line
// graph operations, the enumeration campaigns and the release selftest.
// Every run can leave a JSON manifest (--out) recording the command, input
// hashes, configuration, outcome and timing, so results are reproducible
// from the artifact alone.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "g3/closure.hpp"
#include "g3/detect.hpp"
#include "g3/enumerate.hpp"
#include "g3/graph.hpp"
#include "g3/hamilton.hpp"
#include "g3/invariants.hpp"
#include "g3/linegraph.hpp"
#include "g3/patterns.hpp"
#include "g3/selftest.hpp"
#include "g3/util.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* TOOL_NAME = "gamma3lab";
constexpr const char* TOOL_VERSION = "1.0.0";

struct Config {
    int jobs = 1;
    long long node_budget = -1;
    int max_feasible_set = 5;
    std::string out_path;
    std::string checkpoint_path;
    bool resume = false;
};

// One input blob: read fully, hashed for the manifest.
struct InputBlob {
    std::string source;  // file path or "stdin"
    std::string text;
};

InputBlob read_input(const std::string& path) {
    InputBlob in;
    if (path.empty() || path == "-") {
        in.source = "stdin";
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        in.text = ss.str();
    } else {
        in.source = path;
        std::ifstream f(path, std::ios::binary);
        if (!f) g3::fail(g3::Error::Kind::NotFound, "cannot open input file '" + path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        in.text = ss.str();
    }
    return in;
}

// First nonempty line; graph6 inputs are one line, possibly with a header.
std::string first_line(const std::string& text) {
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) return line;
        pos = end + 1;
    }
    g3::fail(g3::Error::Kind::Parse, "empty input, expected a graph6 line");
}

void note_input(ordered_json& manifest, const std::string& role, const InputBlob& in) {
    manifest["inputs"][role] = {{"source", in.source},
                                {"fnv1a64", g3::hex64(g3::fnv1a64(in.text))}};
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

ordered_json trace_json(const g3::ClosureTrace& trace) {
    ordered_json steps = ordered_json::array();
    for (const g3::ClosureStep& s : trace.steps)
        steps.push_back({{"vertices", s.vertices},
                         {"justification", s.justification},
                         {"graph_hash", g3::hex64(s.graph_hash)}});
    return {{"initial_hash", g3::hex64(trace.initial_hash)},
            {"final_hash", g3::hex64(trace.final_hash)},
            {"steps", std::move(steps)}};
}

std::string filter_name(int index) {
    static const char* names[] = {"claw", "gamma3", "w5"};
    if (index >= 0 && index < 3) return names[index];
    return "filter" + std::to_string(index);
}

ordered_json campaign_json(const std::string& which, const g3::CampaignResult& res,
                           const g3::SimpleGraph* base) {
    ordered_json out;
    out["campaign"] = which;
    out["pass"] = res.pass;
    out["detail"] = res.detail;
    out["class_count"] = res.report.class_count;
    out["labeled_count"] = res.report.labeled_count;
    out["nodes_explored"] = res.report.nodes_explored;
    out["wall_seconds"] = res.report.wall_seconds;
    out["tasks_run"] = res.tasks_run;

    ordered_json survivors = ordered_json::array();
    for (const g3::Survivor& s : res.report.survivors) {
        ordered_json row;
        row["pair_indices"] = s.pair_indices;
        row["added_edges"] = s.added_edges;
        if (base && !base->labels.empty()) {
            std::vector<std::string> labels;
            for (auto [u, v] : s.added_edges)
                labels.push_back(base->label_of(u) + " " + base->label_of(v));
            row["added_edge_labels"] = labels;
        }
        row["orbit_size"] = s.orbit_size;
        if (base) {
            g3::SimpleGraph done = *base;
            for (auto [u, v] : s.added_edges) done.add_edge(u, v);
            row["graph6"] = g3::write_graph6(done);
        }
        row["canonical_graph6"] = s.canonical;
        survivors.push_back(std::move(row));
    }
    out["survivors"] = std::move(survivors);

    ordered_json witnesses = ordered_json::array();
    for (const g3::WitnessNote& w : res.report.witness_samples)
        witnesses.push_back({{"filter_index", w.filter_index},
                             {"filter", filter_name(w.filter_index)},
                             {"vertices", w.vertices}});
    out["witness_samples"] = std::move(witnesses);

    ordered_json forced = ordered_json::array();
    for (const g3::ForcedNote& f : res.report.forced_samples)
        forced.push_back({{"pair_index", f.pair_index},
                          {"center", f.center},
                          {"other_leaf", f.other_leaf}});
    out["forced_samples"] = std::move(forced);

    if (!res.mapping.empty()) {
        ordered_json mapping = ordered_json::array();
        for (auto [cls, addition] : res.mapping)
            mapping.push_back({{"survivor", cls}, {"addition", addition}});
        out["mapping"] = std::move(mapping);
    }
    return out;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommand handlers: fill manifest["outcome"], return the exit code --

int run_pattern(const std::string& name, const std::vector<int>& params, ordered_json& manifest) {
    std::string full = name;
    for (int p : params) full += "-" + std::to_string(p);
    g3::SimpleGraph g = g3::make_pattern(full);
    std::string g6 = g3::write_graph6(g);
    std::cout << g6 << "\n";
    ordered_json labels = ordered_json::array();
    for (int v = 0; v < g.n; ++v) {
        std::cout << v << "\t" << g.label_of(v) << "\n";
        labels.push_back(g.label_of(v));
    }
    manifest["outcome"] = {{"name", full},
                           {"vertices", g.n},
                           {"edges", g.edge_count()},
                           {"graph6", g6},
                           {"labels", std::move(labels)}};
    return 0;
}

int run_free(const std::string& input, const std::string& patterns, ordered_json& manifest) {
    InputBlob in = read_input(input);
    note_input(manifest, "host", in);
    g3::SimpleGraph g = g3::parse_graph6(first_line(in.text));

    std::vector<std::string> names = split_csv(patterns);
    if (names.empty()) g3::fail(g3::Error::Kind::Usage, "--patterns must name at least one pattern");
    std::vector<g3::SimpleGraph> pats;
    for (const std::string& n : names) pats.push_back(g3::make_pattern(n));

    g3::FreenessReport rep = g3::is_free(g, pats);
    ordered_json out;
    out["patterns"] = names;
    out["free"] = rep.free;
    if (!rep.free)
        out["witness"] = {{"pattern", names[static_cast<size_t>(rep.pattern_index)]},
                          {"pattern_index", rep.pattern_index},
                          {"vertices", rep.witness.map}};
    print_json(out);
    manifest["outcome"] = std::move(out);
    return rep.free ? 0 : 1;
}

int run_hamconn(const std::string& input, bool with_paths, long long budget,
                ordered_json& manifest) {
    InputBlob in = read_input(input);
    note_input(manifest, "graph", in);
    g3::SimpleGraph g = g3::parse_graph6(first_line(in.text));

    g3::HamVerdict v = g3::is_hamilton_connected(g, budget);
    ordered_json out;
    out["vertices"] = g.n;
    out["connected"] = v.connected;
    if (v.failing_pair)
        out["failing_pair"] = {v.failing_pair->first, v.failing_pair->second};
    else
        out["failing_pair"] = nullptr;
    if (with_paths) {
        ordered_json paths;
        for (const auto& [pair, path] : v.witness_paths)
            paths[std::to_string(pair.first) + "-" + std::to_string(pair.second)] = path;
        out["witness_paths"] = std::move(paths);
    }
    print_json(out);
    manifest["outcome"] = std::move(out);
    return 0;
}

int run_close(const std::string& input, const std::string& mode, const Config& cfg,
              ordered_json& manifest) {
    InputBlob in = read_input(input);
    note_input(manifest, "graph", in);
    g3::SimpleGraph g = g3::parse_graph6(first_line(in.text));

    std::pair<g3::SimpleGraph, g3::ClosureTrace> res;
    if (mode == "ryjacek") {
        res = g3::ryjacek_closure(g);
    } else {
        g3::Gamma3Options opt;
        opt.max_set_size = cfg.max_feasible_set;
        if (cfg.node_budget > 0) opt.node_budget = cfg.node_budget;
        res = g3::gamma3_closure(g, opt);
    }
    std::string g6 = g3::write_graph6(res.first);
    ordered_json out;
    out["mode"] = mode;
    out["vertices"] = res.first.n;
    out["edges_before"] = g.edge_count();
    out["edges_after"] = res.first.edge_count();
    out["graph6"] = g6;
    out["trace"] = trace_json(res.second);
    std::cout << g6 << "\n";
    print_json(out["trace"]);
    manifest["outcome"] = std::move(out);
    return 0;
}

int run_lg(const std::string& input, ordered_json& manifest) {
    InputBlob in = read_input(input);
    note_input(manifest, "multigraph", in);
    g3::Multigraph h = g3::parse_multigraph(in.text);
    g3::SimpleGraph g = g3::line_graph(h);
    std::string g6 = g3::write_graph6(g);
    std::cout << g6 << "\n";
    manifest["outcome"] = {{"vertices", g.n}, {"edges", g.edge_count()}, {"graph6", g6}};
    return 0;
}

int run_preimage(const std::string& input, long long budget, ordered_json& manifest) {
    InputBlob in = read_input(input);
    note_input(manifest, "graph", in);
    g3::SimpleGraph g = g3::parse_graph6(first_line(in.text));

    g3::FreenessReport rec = g3::is_line_graph_of_multigraph(g);
    ordered_json out;
    out["is_line_graph"] = rec.free;
    if (!rec.free) {
        out["obstruction"] = {{"index", rec.pattern_index}, {"vertices", rec.witness.map}};
        print_json(out);
        manifest["outcome"] = std::move(out);
        return 1;
    }
    std::optional<g3::Multigraph> pre = g3::preimage(g, budget);
    if (!pre)
        g3::fail(g3::Error::Kind::Precondition,
                 "recognition accepted the graph but no preimage was found");
    std::string text = g3::write_multigraph(*pre);
    int pendant = 0;
    for (auto [u, v] : pre->edges) pendant += pre->degree(u) == 1 || pre->degree(v) == 1;
    out["vertices"] = pre->n;
    out["edges"] = pre->edge_count();
    out["pendant_edges"] = pendant;
    out["multigraph"] = text;
    std::cout << text;
    manifest["outcome"] = std::move(out);
    return 0;
}

int run_campaign(const std::string& which, int fi, const Config& cfg, ordered_json& manifest) {
    g3::CampaignOptions co;
    co.node_budget = cfg.node_budget;
    co.jobs = cfg.jobs;
    co.checkpoint_path = cfg.checkpoint_path;
    co.resume = cfg.resume;

    g3::CampaignResult res;
    std::optional<g3::SimpleGraph> base;
    if (which == "case1") {
        base = g3::case1_task().base;
        res = g3::campaign_w4_case1(co);
    } else if (which == "case22a") {
        base = g3::case22_task('a').base;
        res = g3::campaign_w4_case22('a', co);
    } else if (which == "case22b") {
        base = g3::case22_task('b').base;
        res = g3::campaign_w4_case22('b', co);
    } else if (which == "case22-followup") {
        base = g3::case22_followup_task().base;
        res = g3::campaign_w4_case22_followup(co);
    } else if (which == "tails") {
        if (fi < 1 || fi > 10)
            g3::fail(g3::Error::Kind::Usage, "campaign tails needs --fi between 1 and 10");
        res = g3::campaign_tails(fi, co);
    } else {
        g3::fail(g3::Error::Kind::Usage, "unknown campaign '" + which + "'");
    }

    std::string label = which == "tails" ? which + " --fi " + std::to_string(fi) : which;
    ordered_json out = campaign_json(label, res, base ? &*base : nullptr);
    print_json(out);
    manifest["outcome"] = std::move(out);
    return res.pass ? 0 : 1;
}

int run_selftest_cmd(bool slow, const std::vector<int>& only, const std::string& checkpoints,
                     const Config& cfg, ordered_json& manifest) {
    g3::SelftestOptions opt;
    opt.include_slow = slow;
    opt.jobs = cfg.jobs;
    opt.only = only;
    opt.checkpoint_dir = checkpoints;
    if (!checkpoints.empty()) std::filesystem::create_directories(checkpoints);
    opt.on_result = [](const g3::CheckResult& r) {
        const char* verdict = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
        std::printf("%s %d %s (%.2fs): %s\n", verdict, r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
    };
    std::vector<g3::CheckResult> results = g3::run_selftest(opt);
    if (results.empty()) g3::fail(g3::Error::Kind::Usage, "--only selected no known check");

    ordered_json checks = ordered_json::array();
    for (const g3::CheckResult& r : results)
        checks.push_back({{"id", r.id},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"skipped", r.skipped},
                          {"seconds", r.seconds},
                          {"detail", r.detail}});
    bool ok = g3::all_passed(results);
    manifest["outcome"] = {{"checks", std::move(checks)}, {"all_pass", ok}};
    return ok ? 0 : 1;
}

void write_manifest(const Config& cfg, const ordered_json& manifest) {
    if (cfg.out_path.empty()) return;
    std::ofstream f(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!f) {
        std::fprintf(stderr, "%s: cannot write manifest to '%s'\n", TOOL_NAME,
                     cfg.out_path.c_str());
        return;
    }
    f << manifest.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph toolkit: pattern catalog, forbidden-subgraph scans, Hamilton "
                 "connectivity, closures, line graph operations and exhaustive "
                 "edge-extension campaigns"};
    app.set_version_flag("--version", std::string(TOOL_NAME) + " " + TOOL_VERSION);
    app.require_subcommand(1);

    Config cfg;
    cfg.jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (cfg.jobs < 1) cfg.jobs = 1;
    app.add_option("--jobs", cfg.jobs, "worker threads for campaigns")->capture_default_str();
    app.add_option("--node-budget", cfg.node_budget,
                   "search node budget; negative means unlimited (env GAMMA3_LAB_BUDGET "
                   "overrides)");
    app.add_option("--max-feasible-set", cfg.max_feasible_set,
                   "largest feasible set tried by the gamma3 closure")->capture_default_str();
    app.add_option("--out", cfg.out_path, "write a JSON run manifest here");
    app.add_option("--checkpoint", cfg.checkpoint_path, "campaign checkpoint file");
    app.add_flag("--resume", cfg.resume, "resume from the checkpoint file if present");

    // pattern
    std::string pat_name;
    std::vector<int> pat_params;
    CLI::App* pattern = app.add_subcommand("pattern", "print a catalog graph as graph6 plus "
                                                      "its vertex labels");
    pattern->add_option("name", pat_name, "pattern name, e.g. claw, W5, gamma3, Z8, B2,6, F7")
        ->required();
    pattern->add_option("params", pat_params, "numeric parameters, if given separately");

    // free
    std::string free_input = "-", free_patterns = "claw,gamma3,w5";
    CLI::App* free_cmd = app.add_subcommand("free", "test a graph6 host for induced forbidden "
                                                    "patterns");
    free_cmd->add_option("input", free_input, "graph6 file or - for stdin");
    free_cmd->add_option("--patterns", free_patterns, "comma-separated pattern names")
        ->capture_default_str();

    // hamconn
    std::string ham_input = "-";
    bool ham_paths = false;
    CLI::App* hamconn = app.add_subcommand("hamconn", "decide Hamilton-connectedness of a "
                                                      "graph6 graph");
    hamconn->add_option("input", ham_input, "graph6 file or - for stdin");
    hamconn->add_flag("--paths", ham_paths, "include a witness path for every verified pair");

    // close
    std::string close_input = "-", close_mode;
    CLI::App* close_cmd = app.add_subcommand("close", "compute a closure of a claw-free graph6 "
                                                      "graph");
    close_cmd->add_option("input", close_input, "graph6 file or - for stdin");
    close_cmd->add_option("--mode", close_mode, "ryjacek or gamma3")
        ->required()
        ->check(CLI::IsMember({"ryjacek", "gamma3"}));

    // lg
    std::string lg_input = "-";
    CLI::App* lg_cmd = app.add_subcommand("lg", "line graph of a multigraph given as 'n m' "
                                                "header plus one 'u v' edge per line");
    lg_cmd->add_option("input", lg_input, "multigraph text file or - for stdin");

    // preimage
    std::string pre_input = "-";
    CLI::App* pre_cmd = app.add_subcommand("preimage", "normalized multigraph preimage of a "
                                                       "connected line graph");
    pre_cmd->add_option("input", pre_input, "graph6 file or - for stdin");

    // campaign
    std::string camp_which;
    int camp_fi = 0;
    CLI::App* camp = app.add_subcommand("campaign", "run an exhaustive edge-extension campaign "
                                                    "and check its expected outcome");
    camp->add_option("which", camp_which, "case1, case22a, case22b, case22-followup or tails")
        ->required()
        ->check(CLI::IsMember({"case1", "case22a", "case22b", "case22-followup", "tails"}));
    camp->add_option("--fi", camp_fi, "base graph index for tails (1..10)");

    // selftest
    bool st_slow = false;
    std::vector<int> st_only;
    std::string st_checkpoints;
    CLI::App* selftest = app.add_subcommand("selftest", "run the release checks (CI entry "
                                                        "point)");
    selftest->add_flag("--slow", st_slow, "include the slow feasibility example");
    selftest->add_option("--only", st_only, "run only these check ids");
    selftest->add_option("--checkpoints", st_checkpoints, "directory for campaign checkpoints");

    for (CLI::App* sub : {pattern, free_cmd, hamconn, close_cmd, lg_cmd, pre_cmd, camp, selftest})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    ordered_json manifest;
    {
        std::string cmd;
        for (int i = 1; i < argc; ++i) {
            if (i > 1) cmd += " ";
            cmd += argv[i];
        }
        manifest["command"] = cmd;
    }
    manifest["inputs"] = ordered_json::object();

    auto started = std::chrono::steady_clock::now();
    int code = 2;
    try {
        if (const char* env = std::getenv("GAMMA3_LAB_BUDGET"); env && *env) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end == env || *end != '\0')
                g3::fail(g3::Error::Kind::Usage,
                         "GAMMA3_LAB_BUDGET is not an integer: '" + std::string(env) + "'");
            cfg.node_budget = v;
        }
        manifest["configuration"] = {{"jobs", cfg.jobs},
                                     {"node_budget", cfg.node_budget},
                                     {"max_feasible_set", cfg.max_feasible_set},
                                     {"checkpoint", cfg.checkpoint_path},
                                     {"resume", cfg.resume}};
        long long ham_budget = cfg.node_budget > 0 ? cfg.node_budget : g3::DEFAULT_HAM_BUDGET;

        if (app.got_subcommand(pattern)) {
            code = run_pattern(pat_name, pat_params, manifest);
        } else if (app.got_subcommand(free_cmd)) {
            code = run_free(free_input, free_patterns, manifest);
        } else if (app.got_subcommand(hamconn)) {
            code = run_hamconn(ham_input, ham_paths, ham_budget, manifest);
        } else if (app.got_subcommand(close_cmd)) {
            code = run_close(close_input, close_mode, cfg, manifest);
        } else if (app.got_subcommand(lg_cmd)) {
            code = run_lg(lg_input, manifest);
        } else if (app.got_subcommand(pre_cmd)) {
            long long pre_budget = cfg.node_budget > 0 ? cfg.node_budget
                                                       : g3::DEFAULT_PREIMAGE_BUDGET;
            code = run_preimage(pre_input, pre_budget, manifest);
        } else if (app.got_subcommand(camp)) {
            code = run_campaign(camp_which, camp_fi, cfg, manifest);
        } else if (app.got_subcommand(selftest)) {
            code = run_selftest_cmd(st_slow, st_only, st_checkpoints, cfg, manifest);
        }
    } catch (const g3::Error& e) {
        const char* kind = "usage";
        switch (e.kind) {
            case g3::Error::Kind::Parse: kind = "parse"; break;
            case g3::Error::Kind::Precondition: kind = "precondition"; break;
            case g3::Error::Kind::Budget: kind = "budget"; break;
            case g3::Error::Kind::NotFound: kind = "not-found"; break;
            case g3::Error::Kind::Usage: kind = "usage"; break;
        }
        manifest["outcome"] = {{"status", "error"}, {"kind", kind}, {"message", e.what()}};
        std::fprintf(stderr, "%s: %s\n", TOOL_NAME, e.what());
        code = 2;
    } catch (const std::exception& e) {
        manifest["outcome"] = {{"status", "error"}, {"kind", "internal"}, {"message", e.what()}};
        std::fprintf(stderr, "%s: %s\n", TOOL_NAME, e.what());
        code = 2;
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    manifest["timing"] = {{"wall_seconds", wall}};
    manifest["tool"] = {{"name", TOOL_NAME}, {"version", TOOL_VERSION}};
    write_manifest(cfg, manifest);
    return code;
}
