#include "g3/linegraph.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "g3/patterns.hpp"
#include "g3/util.hpp"

namespace g3 {

SimpleGraph line_graph(const Multigraph& h) {
    int m = h.edge_count();
    if (m > SimpleGraph::MAX_N)
        fail(Error::Kind::Precondition,
             "line graph order " + std::to_string(m) + " above " +
                 std::to_string(SimpleGraph::MAX_N));
    SimpleGraph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = h.edges[i];
            auto [c, d] = h.edges[j];
            if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
        }
    return g;
}

Multigraph contract_to_pendant(const Multigraph& h, int edge_index) {
    if (edge_index < 0 || edge_index >= h.edge_count())
        fail(Error::Kind::Precondition, "contraction edge index out of range");
    auto [u, v] = h.edges[edge_index];

    // v merges into u; vertices above v shift down one slot.
    auto remap = [&](int w) {
        if (w == v) w = u;
        return w > v ? w - 1 : w;
    };
    int loops = 0;
    for (auto& e : h.edges) loops += (remap(e.first) == remap(e.second));

    Multigraph out(h.n - 1 + loops);
    int next_pendant = h.n - 1;
    for (auto& e : h.edges) {
        int a = remap(e.first), b = remap(e.second);
        if (a == b)
            out.add_edge(a, next_pendant++);
        else
            out.add_edge(a, b);
    }
    return out;
}

FreenessReport is_line_graph_of_multigraph(const SimpleGraph& g) {
    static const std::vector<SimpleGraph> obstructions = [] {
        std::vector<SimpleGraph> v;
        for (int i = 1; i <= 7; ++i) v.push_back(make_obstruction(i));
        return v;
    }();
    return is_free(g, obstructions);
}

namespace {

// Backtracking over endpoint assignments.  Every vertex of g receives two
// distinct endpoint ids; adjacency in g must coincide with sharing an id.
// Endpoint ids become the vertices of the preimage, g-vertices its edges.
struct PreimageSearch {
    const SimpleGraph& g;
    long long budget;
    long long nodes = 0;

    std::vector<int> order;                // BFS placement order
    std::vector<uint64_t> members;         // endpoint id -> mask of g-vertices
    std::vector<std::array<int, 2>> pick;  // g-vertex -> its two endpoint ids
    uint64_t placed = 0;
    uint64_t simplicial = 0;
    std::optional<Multigraph> result;

    PreimageSearch(const SimpleGraph& g_, long long budget_)
        : g(g_), budget(budget_), pick(g_.n, {-1, -1}) {
        std::vector<int> queue{0};
        uint64_t seen = g.n ? 1ull : 0ull;
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            order.push_back(x);
            for (int w : vertices_from_mask(g.adj[x] & ~seen)) {
                seen |= 1ull << w;
                queue.push_back(w);
            }
        }
        for (int x = 0; x < g.n; ++x)
            if (neighborhood_is_clique(g, x)) simplicial |= 1ull << x;
    }

    bool compatible(int c, int x) const { return (members[c] & ~g.adj[x]) == 0; }

    bool assign(int x, int a, int b, size_t depth) {
        if (++nodes > budget)
            fail(Error::Kind::Budget,
                 "preimage search exceeded " + std::to_string(budget) + " nodes");
        members[a] |= 1ull << x;
        members[b] |= 1ull << x;
        pick[x] = {a, b};
        placed |= 1ull << x;
        bool done = place(depth + 1);
        placed &= ~(1ull << x);
        pick[x] = {-1, -1};
        members[a] &= ~(1ull << x);
        members[b] &= ~(1ull << x);
        return done;
    }

    bool place(size_t depth) {
        if (depth == order.size()) return leaf();
        int x = order[depth];
        bool simp = (simplicial >> x) & 1;
        uint64_t need = g.adj[x] & placed;
        int existing = static_cast<int>(members.size());

        // One existing endpoint covering all earlier neighbors, one fresh.
        for (int a = 0; a < existing; ++a) {
            if (!compatible(a, x) || (need & ~members[a]) != 0) continue;
            members.push_back(0);
            bool done = assign(x, a, existing, depth);
            members.pop_back();
            if (done) return true;
        }
        // Two existing endpoints; a simplicial vertex needs an endpoint of
        // degree one, which an already-populated pair can never provide.
        if (!simp) {
            for (int a = 0; a < existing; ++a) {
                if (!compatible(a, x)) continue;
                for (int b = a + 1; b < existing; ++b) {
                    if (!compatible(b, x)) continue;
                    if ((need & ~(members[a] | members[b])) != 0) continue;
                    if (assign(x, a, b, depth)) return true;
                }
            }
        }
        // Two fresh endpoints, possible only with no placed neighbor.
        if (need == 0) {
            members.push_back(0);
            members.push_back(0);
            bool done = assign(x, existing, existing + 1, depth);
            members.pop_back();
            members.pop_back();
            if (done) return true;
        }
        return false;
    }

    bool leaf() {
        for (int x = 0; x < g.n; ++x) {
            bool pendant = __builtin_popcountll(members[pick[x][0]]) == 1 ||
                           __builtin_popcountll(members[pick[x][1]]) == 1;
            if (pendant != (((simplicial >> x) & 1) != 0)) return false;
        }
        std::vector<int> id(members.size(), -1);
        int used = 0;
        for (int x = 0; x < g.n; ++x)
            for (int slot : {0, 1})
                if (id[pick[x][slot]] < 0) id[pick[x][slot]] = used++;
        Multigraph h(used);
        for (int x = 0; x < g.n; ++x) h.add_edge(id[pick[x][0]], id[pick[x][1]]);
        result = std::move(h);
        return true;
    }
};

}  // namespace

std::optional<Multigraph> preimage(const SimpleGraph& g, long long node_budget) {
    if (!is_connected(g))
        fail(Error::Kind::Precondition, "preimage requires a connected graph");
    if (g.n == 0) return Multigraph{};
    PreimageSearch search(g, node_budget);
    search.place(0);
    return search.result;
}

namespace {

// Number of components of h - removed that still contain an edge.
int edged_components(const Multigraph& h, const std::vector<int>& removed) {
    std::vector<int> root(h.n);
    for (int v = 0; v < h.n; ++v) root[v] = v;
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (int i = 0; i < h.edge_count(); ++i) {
        if (std::find(removed.begin(), removed.end(), i) != removed.end()) continue;
        root[find(h.edges[i].first)] = find(h.edges[i].second);
    }
    uint64_t seen = 0;
    int count = 0;
    for (int i = 0; i < h.edge_count(); ++i) {
        if (std::find(removed.begin(), removed.end(), i) != removed.end()) continue;
        int r = find(h.edges[i].first);
        if (!((seen >> r) & 1)) {
            seen |= 1ull << r;
            ++count;
        }
    }
    return count;
}

bool has_essential_cut(const Multigraph& h, int remaining, int first,
                       std::vector<int>& removed) {
    if (edged_components(h, removed) >= 2) return true;
    if (remaining == 0) return false;
    for (int i = first; i < h.edge_count(); ++i) {
        removed.push_back(i);
        bool found = has_essential_cut(h, remaining - 1, i + 1, removed);
        removed.pop_back();
        if (found) return true;
    }
    return false;
}

}  // namespace

bool is_essentially_k_edge_connected(const Multigraph& h, int k) {
    if (k < 1) fail(Error::Kind::Precondition, "essential connectivity order must be positive");
    if (h.n > 64) fail(Error::Kind::Precondition, "essential connectivity limited to 64 vertices");
    std::vector<int> removed;
    return !has_essential_cut(h, k - 1, 0, removed);
}

}  // namespace g3
