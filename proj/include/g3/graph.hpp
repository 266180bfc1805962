#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g3/util.hpp"

namespace g3 {

// Simple graph on at most 64 vertices, adjacency kept as one 64-bit row per
// vertex.  Graphs are values: operations return new graphs and never mutate
// their arguments.  `labels`, when nonempty, is a bijection index -> name and
// is carried through induced subgraphs and local completions; isomorphism
// ignores it unless a role-respecting mode is requested explicitly.
struct SimpleGraph {
    static constexpr int MAX_N = 64;

    int n = 0;
    std::vector<uint64_t> adj;
    std::vector<std::string> labels;

    SimpleGraph() = default;
    explicit SimpleGraph(int n_) { reset(n_); }

    void reset(int n_) {
        if (n_ < 0 || n_ > MAX_N)
            fail(Error::Kind::Precondition,
                 "graph order " + std::to_string(n_) + " outside supported range 0.." +
                     std::to_string(MAX_N));
        n = n_;
        adj.assign(static_cast<size_t>(n_), 0);
        labels.clear();
    }

    static SimpleGraph complete(int n_) {
        SimpleGraph g(n_);
        for (int v = 0; v < n_; ++v) g.adj[v] = g.vertex_mask() & ~(1ull << v);
        return g;
    }

    static SimpleGraph from_edges(int n_, const std::vector<std::pair<int, int>>& edges) {
        SimpleGraph g(n_);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    uint64_t vertex_mask() const { return n == 64 ? ~0ull : (1ull << n) - 1; }

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n)
            fail(Error::Kind::Precondition, "vertex " + std::to_string(v) + " out of range 0.." +
                                                std::to_string(n - 1));
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) fail(Error::Kind::Precondition, "self-loop at vertex " + std::to_string(u));
        adj[u] |= 1ull << v;
        adj[v] |= 1ull << u;
    }

    void remove_edge(int u, int v) {
        adj[u] &= ~(1ull << v);
        adj[v] &= ~(1ull << u);
    }

    int degree(int v) const { return __builtin_popcountll(adj[v]); }

    uint64_t neighbors(int v) const { return adj[v]; }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n; ++v) total += degree(v);
        return total / 2;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) out.push_back({u, v});
        return out;
    }

    bool is_complete() const {
        for (int v = 0; v < n; ++v)
            if (adj[v] != (vertex_mask() & ~(1ull << v))) return false;
        return true;
    }

    // Index of the vertex carrying `name`, or -1.
    int label_index(const std::string& name) const {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) return static_cast<int>(i);
        return -1;
    }

    // Like label_index but failing loudly; for code that works with named roles.
    int vertex_named(const std::string& name) const {
        int i = label_index(name);
        if (i < 0) fail(Error::Kind::NotFound, "no vertex labeled '" + name + "'");
        return i;
    }

    std::string label_of(int v) const {
        if (v >= 0 && v < static_cast<int>(labels.size())) return labels[v];
        return std::to_string(v);
    }

    bool operator==(const SimpleGraph& o) const { return n == o.n && adj == o.adj; }
};

// The map of an induced-subgraph embedding: vertex i of the pattern sits on
// host vertex map[i].
struct Embedding {
    std::vector<int> map;
};

SimpleGraph parse_graph6(const std::string& line);
std::string write_graph6(const SimpleGraph& g);

// Induced subgraph on `verts`, in the given order; labels follow when present.
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts);
SimpleGraph induced_subgraph(const SimpleGraph& g, uint64_t vert_mask);

SimpleGraph complement_graph(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);
// Mask of vertices reachable from `start` while moving only inside `allowed`.
uint64_t reachable_within(const SimpleGraph& g, int start, uint64_t allowed);

// BFS distance between u and v inside the induced subgraph on N(x); nullopt
// when they sit in different components of it.  u and v must be neighbors
// of x.
std::optional<int> neighborhood_distance(const SimpleGraph& g, int x, int u, int v);

// True when N(v) induces a complete graph, i.e. v is simplicial.
bool neighborhood_is_clique(const SimpleGraph& g, int v);

std::vector<int> vertices_from_mask(uint64_t mask);

// Loopless multigraph: explicit edge list, parallel edges are repeated
// entries (endpoints normalized to u < v).  Order of `edges` is meaningful to
// callers (line_graph numbers its vertices by it).
struct Multigraph {
    static constexpr int MAX_MULTIPLICITY = 255;

    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Multigraph() = default;
    explicit Multigraph(int n_) : n(n_) {
        if (n_ < 0) fail(Error::Kind::Precondition, "negative multigraph order");
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Error::Kind::Precondition, "multigraph edge endpoint out of range");
        if (u == v) fail(Error::Kind::Precondition, "loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (multiplicity(u, v) >= MAX_MULTIPLICITY)
            fail(Error::Kind::Precondition, "edge multiplicity above " +
                                                std::to_string(MAX_MULTIPLICITY));
        edges.push_back({u, v});
    }

    int multiplicity(int u, int v) const {
        if (u > v) std::swap(u, v);
        int count = 0;
        for (auto& e : edges) count += (e.first == u && e.second == v);
        return count;
    }

    int degree(int v) const {
        int d = 0;
        for (auto& e : edges) d += (e.first == v) + (e.second == v);
        return d;
    }

    // Underlying simple graph (parallel edges collapsed).
    SimpleGraph underlying() const {
        SimpleGraph g(n);
        for (auto& e : edges) {
            g.adj[e.first] |= 1ull << e.second;
            g.adj[e.second] |= 1ull << e.first;
        }
        return g;
    }

    bool operator==(const Multigraph& o) const;
};

Multigraph parse_multigraph(const std::string& text);
std::string write_multigraph(const Multigraph& h);
bool is_connected(const Multigraph& h);

}  // namespace g3
