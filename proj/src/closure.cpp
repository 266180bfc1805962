#include "g3/closure.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include "g3/detect.hpp"
#include "g3/invariants.hpp"
#include "g3/patterns.hpp"

namespace g3 {

namespace {

uint64_t bit(int v) { return 1ull << v; }

const SimpleGraph& claw_pattern() {
    static const SimpleGraph claw = make_claw();
    return claw;
}

const SimpleGraph& gamma3_pattern() {
    static const SimpleGraph gamma3 = make_gamma(3);
    return gamma3;
}

// Eligibility without the connectivity computation of classify_vertex: the
// induced neighborhood is connected and noncomplete.
bool eligible_vertex(const SimpleGraph& g, int v) {
    uint64_t nb = g.adj[v];
    if (!nb) return false;
    int first = __builtin_ctzll(nb);
    if (reachable_within(g, first, nb) != nb) return false;
    return !neighborhood_is_clique(g, v);
}

}  // namespace

SimpleGraph local_completion(const SimpleGraph& g, int x) {
    g.check_vertex(x);
    SimpleGraph out = g;
    uint64_t nb = g.adj[x];
    for (uint64_t rest = nb; rest; rest &= rest - 1) {
        int u = __builtin_ctzll(rest);
        out.adj[u] |= nb & ~bit(u);
    }
#ifndef NDEBUG
    // Completion never introduces a claw into a claw-free graph.
    if (is_free(g, {claw_pattern()}).free) assert(is_free(out, {claw_pattern()}).free);
#endif
    return out;
}

SimpleGraph local_completion_set(const SimpleGraph& g, const std::vector<int>& m) {
    std::vector<int> verts = m;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    SimpleGraph out = g;
    for (int x : verts) out = local_completion(out, x);
    return out;
}

VertexClass classify_vertex(const SimpleGraph& g, int x) {
    g.check_vertex(x);
    VertexClass out;
    out.simplicial = neighborhood_is_clique(g, x);
    SimpleGraph nbh = induced_subgraph(g, g.adj[x]);
    out.eligible = is_connected(nbh) && !nbh.is_complete();
    out.local_connectivity = std::min(3, vertex_connectivity(nbh));
    return out;
}

bool lemma_two_indep_sets(const SimpleGraph& g, int x) {
    g.check_vertex(x);
    int d = g.degree(x);
    if (d < 4) return false;
    if (d > 20)
        fail(Error::Kind::Budget,
             "neighborhood of degree " + std::to_string(d) + " too large for the subset scan");
    SimpleGraph nbh = induced_subgraph(g, g.adj[x]);
    std::vector<std::pair<int, int>> nonedges;
    for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v)
            if (!nbh.has_edge(u, v)) nonedges.push_back({u, v});
    if (nonedges.size() < 2) return false;

    auto has_two_disjoint_pairs = [&](uint64_t s) {
        for (size_t i = 0; i < nonedges.size(); ++i) {
            auto [a, b] = nonedges[i];
            if (!((s >> a) & 1) || !((s >> b) & 1)) continue;
            for (size_t j = i + 1; j < nonedges.size(); ++j) {
                auto [c, e] = nonedges[j];
                if (c == a || c == b || e == a || e == b) continue;
                if (((s >> c) & 1) && ((s >> e) & 1)) return true;
            }
        }
        return false;
    };
    auto two_connected_within = [&](uint64_t s) {
        int start = __builtin_ctzll(s);
        if (reachable_within(nbh, start, s) != s) return false;
        for (uint64_t rest = s; rest; rest &= rest - 1) {
            int v = __builtin_ctzll(rest);
            uint64_t kept = s & ~bit(v);
            int from = __builtin_ctzll(kept);
            if (reachable_within(nbh, from, kept) != kept) return false;
        }
        return true;
    };

    for (uint64_t s = 0; s < (1ull << d); ++s) {
        if (__builtin_popcountll(s) < 4) continue;
        if (!has_two_disjoint_pairs(s)) continue;
        if (two_connected_within(s)) return true;
    }
    return false;
}

uint64_t graph_hash(const SimpleGraph& g) { return fnv1a64(write_graph6(g)); }

SimpleGraph replay_trace(const SimpleGraph& initial, const ClosureTrace& trace) {
    SimpleGraph cur = initial;
    for (const ClosureStep& step : trace.steps) {
        if (step.justification == "declared") {
            SimpleGraph k = SimpleGraph::complete(cur.n);
            k.labels = cur.labels;
            cur = k;
        } else {
            cur = local_completion_set(cur, step.vertices);
        }
    }
    return cur;
}

std::pair<SimpleGraph, ClosureTrace> ryjacek_closure(const SimpleGraph& g) {
    if (!is_free(g, {claw_pattern()}).free)
        fail(Error::Kind::Precondition, "closure requires a claw-free input");
    ClosureTrace trace;
    trace.initial_hash = graph_hash(g);
    SimpleGraph cur = g;
    for (;;) {
        int pick = -1;
        for (int v = 0; v < cur.n && pick < 0; ++v)
            if (eligible_vertex(cur, v)) pick = v;
        if (pick < 0) break;
        cur = local_completion(cur, pick);
        trace.steps.push_back({{pick}, "eligible", graph_hash(cur)});
    }
    trace.final_hash = graph_hash(cur);
    return {cur, trace};
}

Feasibility is_feasible(const SimpleGraph& g, int x, long long node_budget) {
    g.check_vertex(x);
    if (is_hamilton_connected(g, node_budget).connected)
        fail(Error::Kind::Precondition, "feasibility is undefined on a Hamilton-connected graph");
    if (neighborhood_is_clique(g, x)) return {false, true};
    bool still_blocked = !is_hamilton_connected(local_completion(g, x), node_budget).connected;
    return {still_blocked, false};
}

namespace {

// Shared state for feasible-order searches over one base graph.  The graph
// completed at a set depends only on the set, so graphs, Hamilton verdicts and
// reachability are memoized per subset mask.
struct CompletionLattice {
    const SimpleGraph& base;
    long long budget;
    std::map<uint64_t, SimpleGraph> graphs;
    std::map<uint64_t, bool> hamconn;
    std::map<uint64_t, bool> reach;

    const SimpleGraph& graph_for(uint64_t mask) {
        if (!mask) return base;
        auto it = graphs.find(mask);
        if (it != graphs.end()) return it->second;
        int low = __builtin_ctzll(mask);
        SimpleGraph next = local_completion(graph_for(mask & (mask - 1)), low);
        return graphs.emplace(mask, std::move(next)).first->second;
    }

    bool not_hamilton_connected(uint64_t mask) {
        auto it = hamconn.find(mask);
        if (it == hamconn.end()) {
            bool hc = is_hamilton_connected(graph_for(mask), budget).connected;
            it = hamconn.emplace(mask, hc).first;
        }
        return !it->second;
    }

    // A strictly feasible ordering of exactly `mask` exists.  Since the graph
    // after the prefix depends only on the prefix set, it suffices that some
    // reachable predecessor set leaves the last vertex nonsimplicial, and that
    // the completed graph is not Hamilton-connected.
    bool reachable(uint64_t mask) {
        if (!mask) return true;
        auto it = reach.find(mask);
        if (it != reach.end()) return it->second;
        bool ok = false;
        for (uint64_t rest = mask; rest && !ok; rest &= rest - 1) {
            int v = __builtin_ctzll(rest);
            uint64_t prev = mask ^ bit(v);
            if (!reachable(prev)) continue;
            if (neighborhood_is_clique(graph_for(prev), v)) continue;
            ok = not_hamilton_connected(mask);
            break;
        }
        reach.emplace(mask, ok);
        return ok;
    }
};

std::optional<std::vector<int>> feasible_order_impl(const SimpleGraph& g,
                                                    const std::vector<int>& m_in,
                                                    long long budget, bool weak) {
    std::vector<int> m = m_in;
    for (int v : m) g.check_vertex(v);
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (is_hamilton_connected(g, budget).connected)
        fail(Error::Kind::Precondition, "feasibility is undefined on a Hamilton-connected graph");
    if (m.empty()) return std::vector<int>{};

    CompletionLattice lat{g, budget, {}, {}, {}};
    std::set<uint64_t> dead;
    std::vector<int> order;
    // Depth-first over orderings, candidates ascending, so the first ordering
    // found is lexicographically least.  Simplicial steps leave the graph
    // unchanged and are only admitted in weak mode after the first vertex.
    auto dfs = [&](auto&& self, uint64_t mask) -> bool {
        if (order.size() == m.size()) return true;
        if (dead.count(mask)) return false;
        for (int v : m) {
            if (mask & bit(v)) continue;
            bool ok;
            if (neighborhood_is_clique(lat.graph_for(mask), v))
                ok = weak && !order.empty();
            else
                ok = lat.not_hamilton_connected(mask | bit(v));
            if (!ok) continue;
            order.push_back(v);
            if (self(self, mask | bit(v))) return true;
            order.pop_back();
        }
        dead.insert(mask);
        return false;
    };
    if (dfs(dfs, 0)) return order;
    return std::nullopt;
}

// Smallest, then lexicographically first, strictly feasible subset of the
// nonsimplicial vertices whose completion is Gamma3-free.  nullopt when no
// set of size <= max_set_size qualifies, which is the closure's terminal
// condition.
std::optional<std::vector<int>> find_gamma3_step(const SimpleGraph& cur, const Gamma3Options& opt) {
    CompletionLattice lat{cur, opt.node_budget, {}, {}, {}};
    std::vector<int> ns;
    for (int v = 0; v < cur.n; ++v)
        if (!neighborhood_is_clique(cur, v)) ns.push_back(v);
    int limit = std::min<int>(opt.max_set_size, static_cast<int>(ns.size()));
    for (int k = 1; k <= limit; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            uint64_t mask = 0;
            for (int i : idx) mask |= bit(ns[i]);
            if (lat.reachable(mask) && is_free(lat.graph_for(mask), {gamma3_pattern()}).free) {
                std::vector<int> verts;
                for (int i : idx) verts.push_back(ns[i]);
                return verts;
            }
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == static_cast<int>(ns.size()) - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_feasible_order(const SimpleGraph& g,
                                                    const std::vector<int>& m,
                                                    long long node_budget) {
    return feasible_order_impl(g, m, node_budget, false);
}

std::optional<std::vector<int>> is_weakly_feasible(const SimpleGraph& g,
                                                   const std::vector<int>& m,
                                                   long long node_budget) {
    return feasible_order_impl(g, m, node_budget, true);
}

std::pair<SimpleGraph, ClosureTrace> gamma3_closure(const SimpleGraph& g,
                                                    const Gamma3Options& opt) {
    if (opt.max_set_size < 1)
        fail(Error::Kind::Precondition, "feasible-set size cap must be positive");
    FreenessReport rep = is_free(g, {claw_pattern(), gamma3_pattern()});
    if (!rep.free)
        fail(Error::Kind::Precondition,
             std::string("closure input must be claw-free and Gamma3-free; found an induced ") +
                 (rep.pattern_index == 0 ? "claw" : "Gamma3"));

    ClosureTrace trace;
    trace.initial_hash = graph_hash(g);
    if (is_hamilton_connected(g, opt.node_budget).connected) {
        SimpleGraph k = SimpleGraph::complete(g.n);
        k.labels = g.labels;
        trace.steps.push_back({{}, "declared", graph_hash(k)});
        trace.final_hash = trace.steps.back().graph_hash;
        return {k, trace};
    }

    SimpleGraph cur = g;
    for (;;) {
        // Loop invariant: cur is claw-free, Gamma3-free and not
        // Hamilton-connected.  Each applied step completes at least one
        // nonsimplicial vertex, so it adds an edge and the loop terminates.
        std::optional<std::vector<int>> step = find_gamma3_step(cur, opt);
        if (!step) break;
        cur = local_completion_set(cur, *step);
        trace.steps.push_back({*step, "feasible", graph_hash(cur)});
        assert(is_free(cur, {gamma3_pattern()}).free);
        assert(!is_hamilton_connected(cur, opt.node_budget).connected);
    }
    trace.final_hash = graph_hash(cur);
    return {cur, trace};
}

}  // namespace g3
