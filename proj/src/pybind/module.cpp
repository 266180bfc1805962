// Python bindings: the main operations over graph6 strings and plain dicts.
// Heavy calls (campaigns, Hamiltonian searches, closures) release the GIL;
// they only touch C++ state.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

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

namespace py = pybind11;
using namespace g3;

namespace {

SimpleGraph parse(const std::string& g6) { return parse_graph6(g6); }

Multigraph multigraph_from(int n, const std::vector<std::pair<int, int>>& edges) {
    Multigraph h(n);
    for (auto [u, v] : edges) h.add_edge(u, v);
    return h;
}

py::dict free_report(const std::string& g6, const std::vector<std::string>& names) {
    SimpleGraph g = parse(g6);
    std::vector<SimpleGraph> pats;
    for (const std::string& n : names) pats.push_back(make_pattern(n));
    FreenessReport rep;
    {
        py::gil_scoped_release release;
        rep = is_free(g, pats);
    }
    py::dict out;
    out["free"] = rep.free;
    if (!rep.free) {
        out["pattern"] = names[static_cast<size_t>(rep.pattern_index)];
        out["pattern_index"] = rep.pattern_index;
        out["vertices"] = rep.witness.map;
    }
    return out;
}

py::dict hamconn_report(const std::string& g6, long long budget) {
    SimpleGraph g = parse(g6);
    HamVerdict v;
    {
        py::gil_scoped_release release;
        v = is_hamilton_connected(g, budget);
    }
    py::dict out;
    out["connected"] = v.connected;
    if (v.failing_pair)
        out["failing_pair"] = py::make_tuple(v.failing_pair->first, v.failing_pair->second);
    else
        out["failing_pair"] = py::none();
    return out;
}

py::object ham_path_py(const std::string& g6, int u, int v, long long budget) {
    SimpleGraph g = parse(g6);
    std::optional<std::vector<int>> path;
    {
        py::gil_scoped_release release;
        path = has_ham_path(g, u, v, budget);
    }
    if (!path) return py::none();
    return py::cast(*path);
}

py::dict close_report(const std::string& g6, const std::string& mode, int max_set,
                      long long budget) {
    SimpleGraph g = parse(g6);
    std::pair<SimpleGraph, ClosureTrace> res;
    {
        py::gil_scoped_release release;
        if (mode == "ryjacek") {
            res = ryjacek_closure(g);
        } else if (mode == "gamma3") {
            Gamma3Options opt;
            opt.max_set_size = max_set;
            if (budget > 0) opt.node_budget = budget;
            res = gamma3_closure(g, opt);
        } else {
            fail(Error::Kind::Usage, "mode must be 'ryjacek' or 'gamma3', got '" + mode + "'");
        }
    }
    py::dict out;
    out["graph6"] = write_graph6(res.first);
    out["edges_before"] = g.edge_count();
    out["edges_after"] = res.first.edge_count();
    out["initial_hash"] = hex64(res.second.initial_hash);
    out["final_hash"] = hex64(res.second.final_hash);
    py::list steps;
    for (const ClosureStep& s : res.second.steps) {
        py::dict step;
        step["vertices"] = s.vertices;
        step["justification"] = s.justification;
        step["graph_hash"] = hex64(s.graph_hash);
        steps.append(step);
    }
    out["steps"] = steps;
    return out;
}

py::dict preimage_report(const std::string& g6, long long budget) {
    SimpleGraph g = parse(g6);
    FreenessReport rec;
    std::optional<Multigraph> pre;
    {
        py::gil_scoped_release release;
        rec = is_line_graph_of_multigraph(g);
        if (rec.free) pre = preimage(g, budget);
    }
    py::dict out;
    out["is_line_graph"] = rec.free;
    if (!rec.free) {
        out["obstruction_index"] = rec.pattern_index;
        out["obstruction_vertices"] = rec.witness.map;
    } else if (pre) {
        out["n"] = pre->n;
        out["edges"] = pre->edges;
    }
    return out;
}

py::dict feasible_report(const std::string& g6, int x, long long budget) {
    SimpleGraph g = parse(g6);
    Feasibility f;
    {
        py::gil_scoped_release release;
        f = is_feasible(g, x, budget);
    }
    py::dict out;
    out["feasible"] = f.feasible;
    out["simplicial"] = f.simplicial;
    return out;
}

py::dict campaign_report(const std::string& which, int fi, int jobs, long long node_budget,
                         const std::string& checkpoint, bool resume) {
    CampaignOptions co;
    co.jobs = jobs;
    co.node_budget = node_budget;
    co.checkpoint_path = checkpoint;
    co.resume = resume;
    CampaignResult res;
    {
        py::gil_scoped_release release;
        if (which == "case1") {
            res = campaign_w4_case1(co);
        } else if (which == "case22a") {
            res = campaign_w4_case22('a', co);
        } else if (which == "case22b") {
            res = campaign_w4_case22('b', co);
        } else if (which == "case22-followup") {
            res = campaign_w4_case22_followup(co);
        } else if (which == "tails") {
            if (fi < 1 || fi > 10)
                fail(Error::Kind::Usage, "campaign 'tails' needs fi between 1 and 10");
            res = campaign_tails(fi, co);
        } else {
            fail(Error::Kind::Usage, "unknown campaign '" + which + "'");
        }
    }
    py::dict out;
    out["pass"] = res.pass;
    out["detail"] = res.detail;
    out["class_count"] = res.report.class_count;
    out["labeled_count"] = res.report.labeled_count;
    out["nodes_explored"] = res.report.nodes_explored;
    out["tasks_run"] = res.tasks_run;
    py::list survivors;
    for (const Survivor& s : res.report.survivors) {
        py::dict row;
        row["pair_indices"] = s.pair_indices;
        row["added_edges"] = s.added_edges;
        row["orbit_size"] = s.orbit_size;
        row["canonical_graph6"] = s.canonical;
        survivors.append(row);
    }
    out["survivors"] = survivors;
    if (!res.mapping.empty()) out["mapping"] = res.mapping;
    return out;
}

py::list selftest_report(const std::vector<int>& only, bool include_slow, int jobs,
                         const std::string& checkpoint_dir) {
    SelftestOptions opt;
    opt.only = only;
    opt.include_slow = include_slow;
    opt.jobs = jobs;
    opt.checkpoint_dir = checkpoint_dir;
    std::vector<CheckResult> results;
    {
        py::gil_scoped_release release;
        results = run_selftest(opt);
    }
    py::list out;
    for (const CheckResult& r : results) {
        py::dict row;
        row["id"] = r.id;
        row["name"] = r.name;
        row["pass"] = r.pass;
        row["skipped"] = r.skipped;
        row["seconds"] = r.seconds;
        row["detail"] = r.detail;
        out.append(row);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "claw-free graph closures, line graph preimages and exhaustive "
              "edge-extension campaigns";

    py::register_exception<Error>(m, "LibraryError");

    m.def("pattern", [](const std::string& name) { return write_graph6(make_pattern(name)); },
          py::arg("name"), "graph6 of a catalog graph (claw, W5, gamma3, Z8, B2,6, F7, ...)");
    m.def("pattern_labels",
          [](const std::string& name) {
              SimpleGraph g = make_pattern(name);
              std::vector<std::string> out;
              for (int v = 0; v < g.n; ++v) out.push_back(g.label_of(v));
              return out;
          },
          py::arg("name"));
    m.def("pattern_names", &pattern_name_summary);

    m.def("from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              return write_graph6(SimpleGraph::from_edges(n, edges));
          },
          py::arg("n"), py::arg("edges"));
    m.def("edges",
          [](const std::string& g6) { return parse(g6).edge_list(); },
          py::arg("graph6"));
    m.def("order", [](const std::string& g6) { return parse(g6).n; }, py::arg("graph6"));

    m.def("canonical", [](const std::string& g6) { return canonical_form(parse(g6)); },
          py::arg("graph6"));
    m.def("isomorphic",
          [](const std::string& a, const std::string& b) {
              return are_isomorphic(parse(a), parse(b));
          },
          py::arg("graph6_a"), py::arg("graph6_b"));

    m.def("is_free", &free_report, py::arg("graph6"),
          py::arg("patterns") = std::vector<std::string>{"claw", "gamma3", "w5"},
          "scan for induced forbidden patterns; reports the first embedding found");

    m.def("hamilton_connected", &hamconn_report, py::arg("graph6"),
          py::arg("node_budget") = DEFAULT_HAM_BUDGET);
    m.def("ham_path", &ham_path_py, py::arg("graph6"), py::arg("u"), py::arg("v"),
          py::arg("node_budget") = DEFAULT_HAM_BUDGET,
          "a Hamiltonian path from u to v, or None");
    m.def("hamiltonian",
          [](const std::string& g6, long long budget) {
              SimpleGraph g = parse(g6);
              py::gil_scoped_release release;
              return is_hamiltonian(g, budget);
          },
          py::arg("graph6"), py::arg("node_budget") = DEFAULT_HAM_BUDGET);

    m.def("local_completion",
          [](const std::string& g6, int x) { return write_graph6(local_completion(parse(g6), x)); },
          py::arg("graph6"), py::arg("x"));
    m.def("feasible", &feasible_report, py::arg("graph6"), py::arg("x"),
          py::arg("node_budget") = DEFAULT_HAM_BUDGET);
    m.def("close", &close_report, py::arg("graph6"), py::arg("mode") = "gamma3",
          py::arg("max_feasible_set") = 5, py::arg("node_budget") = -1);

    m.def("line_graph",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              return write_graph6(line_graph(multigraph_from(n, edges)));
          },
          py::arg("n"), py::arg("edges"),
          "line graph of the multigraph on n vertices; repeat an edge for a parallel copy");
    m.def("preimage", &preimage_report, py::arg("graph6"),
          py::arg("node_budget") = DEFAULT_PREIMAGE_BUDGET,
          "normalized multigraph preimage of a connected line graph");

    m.def("campaign", &campaign_report, py::arg("which"), py::arg("fi") = 0, py::arg("jobs") = 1,
          py::arg("node_budget") = -1, py::arg("checkpoint") = std::string(),
          py::arg("resume") = false,
          "run one of: case1, case22a, case22b, case22-followup, tails");
    m.def("selftest", &selftest_report, py::arg("only") = std::vector<int>{},
          py::arg("include_slow") = false, py::arg("jobs") = 1,
          py::arg("checkpoint_dir") = std::string(), "the release checks, as a list of dicts");
}
