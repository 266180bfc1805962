#include "g3/hamilton.hpp"

#include <algorithm>
#include <bit>

namespace g3 {

namespace {

constexpr uint64_t bit(int v) { return uint64_t{1} << v; }

// True when deleting some single vertex splits the subgraph induced on
// `mask` into three or more components.  A Hamiltonian path traverses a cut
// vertex once, so it can serve at most two sides.
struct SplitCheck {
    const SimpleGraph& g;
    uint64_t mask;
    int disc[SimpleGraph::MAX_N];
    int low[SimpleGraph::MAX_N];
    int timer = 0;

    explicit SplitCheck(const SimpleGraph& g_, uint64_t mask_) : g(g_), mask(mask_) {}

    // Returns -1 once a bad cut vertex is known, else low-link of v.
    int dfs(int v, int parent) {
        disc[v] = low[v] = timer++;
        int cut_children = 0;
        uint64_t nb = g.adj[v] & mask;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (w == parent) continue;
            if (disc[w] >= 0) {
                low[v] = std::min(low[v], disc[w]);
                continue;
            }
            int sub = dfs(w, v);
            if (sub < 0) return -1;
            low[v] = std::min(low[v], sub);
            if (sub >= disc[v]) ++cut_children;
        }
        bool root = parent < 0;
        if ((root && cut_children >= 3) || (!root && cut_children >= 2)) return -1;
        return low[v];
    }

    bool splits_three() {
        if (std::popcount(mask) < 4) return false;
        for (uint64_t m = mask; m; m &= m - 1) disc[std::countr_zero(m)] = -1;
        int root = std::countr_zero(mask);
        return dfs(root, -1) < 0;
    }
};

struct HamSearch {
    const SimpleGraph& g;
    int target;  // path mode: final vertex; cycle mode: the start, revisited
    bool cycle;
    long long budget;
    long long nodes = 0;
    std::vector<int> seq;

    HamSearch(const SimpleGraph& g_, int target_, bool cycle_, long long budget_)
        : g(g_), target(target_), cycle(cycle_), budget(budget_) {}

    void spend() {
        if (++nodes > budget)
            fail(Error::Kind::Budget,
                 "hamiltonian search exceeded " + std::to_string(budget) + " nodes");
    }

    bool run(int head, uint64_t unvisited) {
        spend();
        if (cycle) {
            if (unvisited == 0) return g.has_edge(head, target);
        } else if (unvisited == bit(target)) {
            if (!g.has_edge(head, target)) return false;
            seq.push_back(target);
            return true;
        }

        // The rest of the path lives inside the unvisited set, so that set
        // must be connected (anchored at the target in path mode).
        int probe = cycle ? std::countr_zero(unvisited) : target;
        if (reachable_within(g, probe, unvisited) != unvisited) return false;

        // Any unvisited vertex needs two usable path slots unless it may end
        // the path.
        uint64_t avail = unvisited | bit(head);
        for (uint64_t m = unvisited; m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (std::popcount(g.adj[w] & avail) >= 2) continue;
            bool may_end = cycle ? g.has_edge(w, target) : w == target;
            if (!may_end) return false;
        }

        if (SplitCheck(g, unvisited).splits_three()) return false;

        uint64_t options = g.adj[head] & unvisited;
        if (!cycle) options &= ~bit(target);
        // Fail-first: extend toward the neighbor with the fewest options left.
        std::pair<int, int> ranked[SimpleGraph::MAX_N];
        int count = 0;
        while (options) {
            int c = std::countr_zero(options);
            options &= options - 1;
            ranked[count++] = {std::popcount(g.adj[c] & unvisited & ~bit(c)), c};
        }
        std::sort(ranked, ranked + count);
        for (int i = 0; i < count; ++i) {
            int c = ranked[i].second;
            seq.push_back(c);
            if (run(c, unvisited & ~bit(c))) return true;
            seq.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> has_ham_path(const SimpleGraph& g, int u, int v,
                                             long long node_budget) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) fail(Error::Kind::Precondition, "hamiltonian path endpoints must differ");
    if (!is_connected(g)) return std::nullopt;
    HamSearch search(g, v, false, node_budget);
    search.seq.push_back(u);
    if (search.run(u, g.vertex_mask() & ~bit(u))) return search.seq;
    return std::nullopt;
}

HamVerdict is_hamilton_connected(const SimpleGraph& g, long long per_pair_budget) {
    HamVerdict verdict;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            auto path = has_ham_path(g, u, v, per_pair_budget);
            if (!path) {
                verdict.connected = false;
                verdict.failing_pair = {u, v};
                return verdict;
            }
            verdict.witness_paths[{u, v}] = std::move(*path);
        }
    verdict.connected = true;
    return verdict;
}

bool is_hamiltonian(const SimpleGraph& g, long long node_budget) {
    if (g.n < 3) return false;
    if (!is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < 2) return false;
    HamSearch search(g, 0, true, node_budget);
    return search.run(0, g.vertex_mask() & ~bit(0));
}

}  // namespace g3
