#include "g3/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
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
#include "g3/util.hpp"

namespace g3 {

namespace {

// Accumulates assertions inside one check; remembers the first failure so the
// result line can say what broke.
struct Probe {
    long long count = 0;
    bool ok = true;
    std::string first_fail;

    void expect(bool cond, const std::string& what) {
        ++count;
        if (!cond && ok) {
            ok = false;
            first_fail = what;
        }
    }
};

std::string plural(long long k, const char* noun) {
    return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

Multigraph to_multigraph(const SimpleGraph& g) {
    Multigraph h(g.n);
    for (auto [u, v] : g.edge_list()) h.add_edge(u, v);
    return h;
}

SimpleGraph random_graph(std::mt19937& rng, int n, double p) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Random spanning tree plus `extra` edges; a duplicate of an existing edge is
// chosen with probability 0.3, raising its multiplicity.
Multigraph random_connected_multigraph(std::mt19937& rng, int n, int extra) {
    Multigraph h(n);
    for (int v = 1; v < n; ++v)
        h.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    std::bernoulli_distribution dup(0.3);
    for (int i = 0; i < extra && n >= 2; ++i) {
        if (!h.edges.empty() && dup(rng)) {
            auto e = h.edges[std::uniform_int_distribution<size_t>(0, h.edges.size() - 1)(rng)];
            h.add_edge(e.first, e.second);
        } else {
            int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
            int v = std::uniform_int_distribution<int>(0, n - 2)(rng);
            if (v >= u) ++v;
            h.add_edge(u, v);
        }
    }
    return h;
}

SimpleGraph icosahedron() {
    SimpleGraph g(12);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(0, 1 + i);
        g.add_edge(11, 6 + i);
        g.add_edge(1 + i, 1 + (i + 1) % 5);
        g.add_edge(6 + i, 6 + (i + 1) % 5);
        g.add_edge(1 + i, 6 + i);
        g.add_edge(1 + i, 6 + (i + 1) % 5);
    }
    return g;
}

// Hamiltonian (u,v)-path existence by enumerating every ordering of the
// interior vertices.  No pruning at all, so it shares nothing with the
// library search it cross-checks.  Usable up to n = 10 (8! interior orders).
bool brute_ham_path(const SimpleGraph& g, int u, int v) {
    if (g.n == 1) return false;
    if (g.n == 2) return g.has_edge(u, v);
    std::vector<int> mid;
    for (int w = 0; w < g.n; ++w)
        if (w != u && w != v) mid.push_back(w);
    std::sort(mid.begin(), mid.end());
    do {
        bool ok = g.has_edge(u, mid.front()) && g.has_edge(mid.back(), v);
        for (size_t i = 0; i + 1 < mid.size() && ok; ++i)
            ok = g.has_edge(mid[i], mid[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(mid.begin(), mid.end()));
    return false;
}

bool valid_ham_path(const SimpleGraph& g, int u, int v, const std::vector<int>& path) {
    if (static_cast<int>(path.size()) != g.n) return false;
    if (path.front() != u || path.back() != v) return false;
    std::vector<char> seen(static_cast<size_t>(g.n), 0);
    for (int w : path) {
        if (w < 0 || w >= g.n || seen[static_cast<size_t>(w)]) return false;
        seen[static_cast<size_t>(w)] = 1;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    return true;
}

std::vector<int> simplicial_set(const SimpleGraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (neighborhood_is_clique(g, v)) out.push_back(v);
    return out;
}

// ---- campaign checks ------------------------------------------------------

std::pair<bool, std::string> check_case1(const SelftestOptions& opt) {
    CampaignOptions co;
    co.jobs = opt.jobs;
    CampaignResult res = campaign_w4_case1(co);
    return {res.pass, res.detail};
}

std::pair<bool, std::string> check_case22(const SelftestOptions& opt) {
    CampaignOptions co;
    co.jobs = opt.jobs;
    CampaignResult a = campaign_w4_case22('a', co);
    CampaignResult b = campaign_w4_case22('b', co);
    CampaignResult f = campaign_w4_case22_followup(co);
    std::string detail = "a: " + a.detail + "; b: " + b.detail + "; follow-up: " + f.detail;
    return {a.pass && b.pass && f.pass, detail};
}

std::pair<bool, std::string> check_tails(const SelftestOptions& opt) {
    long long instances = 0, nodes = 0;
    for (int fi = 1; fi <= 10; ++fi) {
        CampaignOptions co;
        co.jobs = opt.jobs;
        if (!opt.checkpoint_dir.empty()) {
            co.checkpoint_path = opt.checkpoint_dir + "/tails-f" + std::to_string(fi) + ".json";
            co.resume = true;
        }
        CampaignResult res = campaign_tails(fi, co);
        if (!res.pass) return {false, "F" + std::to_string(fi) + ": " + res.detail};
        instances += res.tasks_run;
        nodes += res.report.nodes_explored;
    }
    return {true, "no survivor in any of the " + plural(instances, "instance") + " over F1..F10 (" +
                      plural(nodes, "node") + ")"};
}

// ---- the sharpness example ------------------------------------------------

std::pair<bool, std::string> check_sharpness(const SelftestOptions&) {
    SimpleGraph g = line_graph(to_multigraph(make_wagner_plus()));
    Probe p;
    p.expect(g.n == 20, "order is " + std::to_string(g.n) + ", want 20");
    p.expect(g.edge_count() == 48, "size is " + std::to_string(g.edge_count()) + ", want 48");
    p.expect(vertex_connectivity(g) >= 3, "not 3-connected");

    std::vector<SimpleGraph> forbidden = {make_claw(), make_path_graph(10), make_Z(8)};
    std::vector<std::string> names = {"claw", "P10", "Z8"};
    for (int i = 1; i + i <= 8; ++i) {
        forbidden.push_back(make_B(i, 8 - i));
        names.push_back("B" + std::to_string(i) + "," + std::to_string(8 - i));
    }
    FreenessReport rep = is_free(g, forbidden);
    p.expect(rep.free, rep.free ? "" : "induced " + names[static_cast<size_t>(rep.pattern_index)]);

    HamVerdict hv = is_hamilton_connected(g);
    p.expect(!hv.connected, "Hamilton-connected, expected a failing pair");

    if (!p.ok) return {false, p.first_fail};
    auto [u, v] = *hv.failing_pair;
    return {true, "20 vertices, 48 edges, 3-connected, pattern-free; no spanning path between " +
                      std::to_string(u) + " and " + std::to_string(v)};
}

// ---- preimage round trip --------------------------------------------------

std::pair<bool, std::string> check_preimage(const SelftestOptions&) {
    std::mt19937 rng(260816);
    Probe p;
    long long simplicial_total = 0;
    for (int t = 0; t < 1000 && p.ok; ++t) {
        int n = 2 + t % 6;
        int extra = std::uniform_int_distribution<int>(0, 12 - (n - 1))(rng);
        Multigraph h = random_connected_multigraph(rng, n, extra);
        SimpleGraph g = line_graph(h);
        std::string tag = "trial " + std::to_string(t) + " (" + write_multigraph(h) + "): ";

        std::optional<Multigraph> pre = preimage(g);
        p.expect(pre.has_value(), tag + "no preimage found");
        if (!pre) continue;
        SimpleGraph g2 = line_graph(*pre);
        p.expect(are_isomorphic(g, g2), tag + "round trip changed the isomorphism class");

        // The normalization promise: a line-graph vertex is simplicial
        // exactly when its edge is pendant, index by index.
        int pendant = 0, simplicial = 0;
        for (int i = 0; i < g2.n; ++i) {
            auto [a, b] = pre->edges[static_cast<size_t>(i)];
            bool pend = pre->degree(a) == 1 || pre->degree(b) == 1;
            pendant += pend;
            p.expect(neighborhood_is_clique(g2, i) == pend,
                     tag + "vertex " + std::to_string(i) + " breaks the pendant correspondence");
        }
        for (int i = 0; i < g.n; ++i) simplicial += neighborhood_is_clique(g, i);
        simplicial_total += simplicial;
        p.expect(simplicial == pendant, tag + "simplicial and pendant counts differ");
    }
    if (!p.ok) return {false, p.first_fail};
    return {true, "1000 round trips, " + plural(p.count, "assertion") + ", " +
                      std::to_string(simplicial_total) + " simplicial vertices matched pendant edges"};
}

// ---- closure property suite -----------------------------------------------

std::vector<SimpleGraph> claw_free_corpus(std::mt19937& rng) {
    std::vector<SimpleGraph> out;
    for (int t = 0; t < 30; ++t) {
        Multigraph h = random_connected_multigraph(rng, 3 + t % 4, 2 + t % 5);
        SimpleGraph l = line_graph(h);
        if (l.n >= 3 && l.n <= 12) out.push_back(l);
    }
    out.push_back(make_wheel(4));
    out.push_back(make_wheel(5));
    out.push_back(make_complete_graph(4));
    out.push_back(SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    out.push_back(make_cycle_graph(7));
    out.push_back(make_F(0));
    return out;
}

std::pair<bool, std::string> check_closure(const SelftestOptions&) {
    std::mt19937 rng(401);
    Probe p;
    int equivalence_hits = 0;
    std::vector<SimpleGraph> corpus = claw_free_corpus(rng);
    SimpleGraph claw = make_claw(), triangle = make_complete_graph(3);
    for (size_t ci = 0; ci < corpus.size() && p.ok; ++ci) {
        const SimpleGraph& g = corpus[ci];
        std::string tag = "corpus graph " + std::to_string(ci) + " (" + write_graph6(g) + "): ";
        p.expect(is_free(g, {claw}).free, tag + "not claw-free");

        // Completion at a set must not depend on the order.
        int k = 2 + static_cast<int>(rng() % 3);
        std::vector<int> m;
        while (static_cast<int>(m.size()) < std::min(k, g.n)) {
            int v = static_cast<int>(rng() % static_cast<unsigned>(g.n));
            if (std::find(m.begin(), m.end(), v) == m.end()) m.push_back(v);
        }
        std::sort(m.begin(), m.end());
        SimpleGraph ref = local_completion_set(g, m);
        std::vector<int> perm = m;
        do {
            SimpleGraph cur = g;
            for (int v : perm) cur = local_completion(cur, v);
            p.expect(cur.adj == ref.adj, tag + "completion order changed the result");
        } while (std::next_permutation(perm.begin(), perm.end()) && p.ok);

        for (int x = 0; x < g.n && p.ok; ++x) {
            SimpleGraph gx = local_completion(g, x);
            p.expect(is_free(gx, {claw}).free, tag + "completion broke claw-freeness");
            std::vector<int> before = simplicial_set(g), after = simplicial_set(gx);
            p.expect(std::includes(after.begin(), after.end(), before.begin(), before.end()),
                     tag + "a simplicial vertex stopped being simplicial");
        }

        if (!is_connected(g)) continue;

        // Completing at a locally 2-connected vertex keeps the verdict.
        for (int x = 0; x < g.n; ++x) {
            if (classify_vertex(g, x).local_connectivity < 2) continue;
            bool before = is_hamilton_connected(g).connected;
            bool after = is_hamilton_connected(local_completion(g, x)).connected;
            p.expect(before == after,
                     tag + "completion at the locally 2-connected vertex " + std::to_string(x) +
                         " changed Hamilton-connectedness");
            ++equivalence_hits;
            break;
        }

        SimpleGraph closed = ryjacek_closure(g).first;
        for (int x = 0; x < closed.n; ++x)
            p.expect(!classify_vertex(closed, x).eligible,
                     tag + "closure left the eligible vertex " + std::to_string(x));
        p.expect(is_line_graph_of_multigraph(closed).free, tag + "closure is not a line graph");
        std::optional<Multigraph> pre = preimage(closed);
        p.expect(pre.has_value(), tag + "closure has no preimage");
        if (pre) {
            for (auto [u, v] : pre->edges)
                p.expect(pre->multiplicity(u, v) == 1, tag + "closure preimage has a parallel edge");
            p.expect(!find_induced(pre->underlying(), triangle).has_value(),
                     tag + "closure preimage has a triangle");
        }
        if (g.n >= 4)
            p.expect(is_hamiltonian(closed) == is_hamiltonian(g),
                     tag + "closure changed hamiltonicity");
    }
    p.expect(equivalence_hits >= 8, "only " + std::to_string(equivalence_hits) +
                                        " locally 2-connected completions exercised");
    if (!p.ok) return {false, p.first_fail};
    return {true, plural(static_cast<long long>(corpus.size()), "graph") + ", " +
                      plural(p.count, "assertion") + ", " + std::to_string(equivalence_hits) +
                      " locally 2-connected completions"};
}

// ---- neighborhood structure suite -----------------------------------------

std::pair<bool, std::string> check_local_structure(const SelftestOptions&) {
    std::mt19937 rng(4057);
    Probe p;
    std::vector<SimpleGraph> wheels = {make_claw(), make_wheel(4), make_wheel(5)};

    // A neighborhood configuration witness exists exactly when a claw, W4 or
    // W5 is centered at the vertex.
    int witnesses = 0;
    auto check_vertex = [&](const SimpleGraph& g, int x) {
        bool found = find_endgame(g, x).has_value();
        bool centered = false;
        for (const SimpleGraph& w : wheels)
            if (find_induced(g, w, {{0, x}})) {
                centered = true;
                break;
            }
        p.expect(found == centered, "configuration claim differs from the centered search at " +
                                        std::to_string(x) + " in " + write_graph6(g));
        witnesses += found;
    };
    for (int t = 0; t < 50 && p.ok; ++t) {
        SimpleGraph g = random_graph(rng, 6 + t % 6, 0.25 + 0.07 * (t % 8));
        for (int x = 0; x < g.n && p.ok; ++x) check_vertex(g, x);
    }
    // Planted stars and rims seen only by the chosen center.
    for (int plant = 3; plant <= 5 && p.ok; ++plant) {
        for (int t = 0; t < 8 && p.ok; ++t) {
            SimpleGraph base = random_graph(rng, 7, 0.5);
            SimpleGraph g(base.n + plant);
            for (auto [u, v] : base.edge_list()) g.add_edge(u, v);
            int x = static_cast<int>(rng() % static_cast<unsigned>(base.n));
            for (int i = 0; i < plant; ++i) g.add_edge(x, base.n + i);
            if (plant >= 4)
                for (int i = 0; i < plant; ++i) g.add_edge(base.n + i, base.n + (i + 1) % plant);
            p.expect(find_endgame(g, x).has_value(), "planted configuration not found");
            check_vertex(g, x);
        }
    }
    p.expect(witnesses >= 100, "too few configuration witnesses to trust the sweep");

    // Connected claw-free graphs with three independent vertices: every
    // neighborhood is two cliques or carries an induced 5-cycle, never both.
    std::vector<SimpleGraph> corpus = {icosahedron()};
    while (corpus.size() < 40) {
        SimpleGraph h = random_graph(rng, 6 + corpus.size() % 3, 0.42);
        SimpleGraph l = line_graph(to_multigraph(h));
        if (l.n < 4 || l.n > 14 || !is_connected(l)) continue;
        if (independence_number(l) < 3) continue;
        corpus.push_back(l);
    }
    for (const SimpleGraph& l : corpus) {
        if (!p.ok) break;
        for (int x = 0; x < l.n && p.ok; ++x) {
            bool cover = two_clique_cover(l, x).has_value();
            bool c5 = neighborhood_has_induced_C5(l, x);
            p.expect(cover != c5, "cover/5-cycle dichotomy broke at " + std::to_string(x) +
                                      " in " + write_graph6(l));
        }
    }

    // Connectivity strictly above the independence number forces spanning
    // paths between all pairs.
    int qualified = 0;
    for (int t = 0; t < 120 && qualified < 25 && p.ok; ++t) {
        int n = 5 + t % 6;
        SimpleGraph g = random_graph(rng, n, 0.62 + 0.05 * (t % 4));
        int kappa = vertex_connectivity(g);
        if (kappa == 0 || independence_number(g) >= kappa) continue;
        ++qualified;
        p.expect(is_hamilton_connected(g).connected,
                 "kappa > alpha yet not Hamilton-connected: " + write_graph6(g));
    }
    p.expect(qualified >= 25, "only " + std::to_string(qualified) + " qualifying graphs drawn");

    if (!p.ok) return {false, p.first_fail};
    return {true, plural(p.count, "assertion") + "; " + std::to_string(witnesses) +
                      " configuration witnesses, " + std::to_string(qualified) +
                      " high-connectivity graphs"};
}

// ---- the feasibility-order example ----------------------------------------

// The pendant-edge Petersen graph with one former edge x1 x2 subdivided by w
// and both halves doubled.  The four vertices of its line graph coming from
// the doubled halves show that feasibility of a set depends on checking the
// members in sequence: each is feasible on its own, but completing at one of
// the x2-side copies makes both x1-side copies lose feasibility.
Multigraph feasibility_example() {
    Multigraph h(21);
    // The doubled halves first, so their line-graph indices are 0..3.
    h.add_edge(0, 20);
    h.add_edge(0, 20);
    h.add_edge(1, 20);
    h.add_edge(1, 20);
    for (int i = 0; i < 5; ++i) {
        if (i != 0) h.add_edge(i, (i + 1) % 5);  // outer cycle minus x1 x2
        h.add_edge(5 + i, 5 + (i + 2) % 5);
        h.add_edge(i, 5 + i);
        h.add_edge(i, 10 + i);
        h.add_edge(5 + i, 15 + i);
    }
    return h;
}

std::pair<bool, std::string> check_feasibility_example(const SelftestOptions&) {
    Multigraph h = feasibility_example();
    SimpleGraph g = line_graph(h);
    Probe p;
    p.expect(g.n == 28, "line graph order is " + std::to_string(g.n) + ", want 28");
    p.expect(!is_hamilton_connected(g).connected, "the example is Hamilton-connected");
    for (int v = 0; v < 4 && p.ok; ++v) {
        Feasibility f = is_feasible(g, v);
        p.expect(f.feasible, "vertex " + std::to_string(v) + " is not feasible on its own");
    }
    if (p.ok) {
        SimpleGraph g2 = local_completion(g, 2);
        for (int v : {0, 1}) {
            Feasibility f = is_feasible(g2, v);
            p.expect(!f.simplicial, "vertex " + std::to_string(v) + " went simplicial");
            p.expect(!f.feasible,
                     "vertex " + std::to_string(v) + " stayed feasible after completing at 2");
        }
        // Hence no ordering makes {0, 2} a feasible set, even though both
        // singletons are feasible: the definition is genuinely recursive.
        p.expect(!find_feasible_order(g, {0, 2}).has_value(),
                 "an ordering of {0, 2} was accepted as feasible");
    }
    if (!p.ok) return {false, p.first_fail};
    return {true, "all four parallel-edge vertices feasible alone; both x1-side copies lose "
                  "feasibility after completion at an x2-side copy; {0, 2} has no feasible order"};
}

// ---- Hamiltonian path oracle cross-check -----------------------------------

std::pair<bool, std::string> check_path_oracle(const SelftestOptions&) {
    std::mt19937 rng(77);
    Probe p;

    std::vector<SimpleGraph> corpus;
    for (int k = 2; k <= 8; ++k) corpus.push_back(make_path_graph(k));
    for (int k = 3; k <= 8; ++k) corpus.push_back(make_cycle_graph(k));
    for (int k = 2; k <= 5; ++k) corpus.push_back(make_complete_graph(k));
    for (int i = 1; i <= 5; ++i) corpus.push_back(make_Z(i));
    corpus.push_back(make_claw());
    corpus.push_back(make_wheel(4));
    corpus.push_back(make_wheel(5));
    corpus.push_back(make_B(1, 1));
    corpus.push_back(make_B(2, 2));
    corpus.push_back(make_gamma(1));
    corpus.push_back(make_gamma(2));
    corpus.push_back(SimpleGraph(5));  // edgeless
    for (int t = 0; t < 60; ++t) corpus.push_back(random_graph(rng, 4 + t % 5, 0.15 + 0.1 * (t % 7)));

    long long pairs = 0;
    for (const SimpleGraph& g : corpus) {
        if (!p.ok) break;
        for (int u = 0; u < g.n && p.ok; ++u)
            for (int v = u + 1; v < g.n && p.ok; ++v) {
                ++pairs;
                auto found = has_ham_path(g, u, v);
                if (found)
                    p.expect(valid_ham_path(g, u, v, *found),
                             "invalid path returned in " + write_graph6(g));
                p.expect(found.has_value() == brute_ham_path(g, u, v),
                         "oracle differs from permutation scan in " + write_graph6(g) + " at " +
                             std::to_string(u) + "," + std::to_string(v));
            }
    }

    for (int t = 0; t < 10000 && p.ok; ++t) {
        int n = 5 + t % 6;
        SimpleGraph g = random_graph(rng, n, 0.1 + 0.09 * (t % 9));
        int u = static_cast<int>(rng() % static_cast<unsigned>(n));
        int v = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        if (v >= u) ++v;
        ++pairs;
        auto found = has_ham_path(g, u, v);
        if (found)
            p.expect(valid_ham_path(g, u, v, *found), "invalid path in " + write_graph6(g));
        p.expect(found.has_value() == brute_ham_path(g, u, v),
                 "oracle differs from permutation scan in " + write_graph6(g) + " at " +
                     std::to_string(u) + "," + std::to_string(v));
    }

    if (!p.ok) return {false, p.first_fail};
    return {true, plural(pairs, "pair") + " agree with the permutation scan (" +
                      plural(static_cast<long long>(corpus.size()), "fixed graph") +
                      " exhaustively, 10000 random draws)"};
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& opt) {
    using Body = std::pair<bool, std::string> (*)(const SelftestOptions&);
    struct Entry {
        int id;
        const char* name;
        Body body;
        bool slow;
    };
    const Entry entries[] = {
        {1, "campaign case1", &check_case1, false},
        {2, "campaigns case22a, case22b, case22-followup", &check_case22, false},
        {3, "campaign tails over F1..F10", &check_tails, false},
        {4, "pendant-Wagner line graph sharpness", &check_sharpness, false},
        {5, "preimage round trip", &check_preimage, false},
        {6, "closure property suite", &check_closure, false},
        {7, "neighborhood structure suite", &check_local_structure, false},
        {8, "feasibility order example", &check_feasibility_example, true},
        {9, "Hamiltonian path oracle cross-check", &check_path_oracle, false},
    };

    std::vector<CheckResult> out;
    for (const Entry& e : entries) {
        if (!opt.only.empty() &&
            std::find(opt.only.begin(), opt.only.end(), e.id) == opt.only.end())
            continue;
        CheckResult r;
        r.id = e.id;
        r.name = e.name;
        if (e.slow && !opt.include_slow) {
            r.skipped = true;
            r.detail = "skipped (slow); enable with --slow";
        } else {
            auto start = std::chrono::steady_clock::now();
            try {
                auto [pass, detail] = e.body(opt);
                r.pass = pass;
                r.detail = detail;
            } catch (const std::exception& ex) {
                r.pass = false;
                r.detail = std::string("exception: ") + ex.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
        if (opt.on_result) opt.on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.skipped && !r.pass) return false;
    return true;
}

}  // namespace g3
