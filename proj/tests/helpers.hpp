#pragma once

// Shared test helpers: small independent oracles (brute force, no shortcuts)
// and deterministic random graph generation.  The oracles deliberately use
// the dumbest correct algorithm available so library results are checked
// against something with no shared code path.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "g3/graph.hpp"

namespace testutil {

inline g3::SimpleGraph random_graph(std::mt19937& rng, int n, double p) {
    g3::SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline g3::SimpleGraph relabel(const g3::SimpleGraph& g, const std::vector<int>& perm) {
    // perm maps old vertex -> new vertex.
    g3::SimpleGraph h(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

inline g3::SimpleGraph random_relabel(std::mt19937& rng, const g3::SimpleGraph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

// Independence number by scanning all vertex subsets.  Only for n <= 20.
inline int brute_independence(const g3::SimpleGraph& g) {
    int best = 0;
    for (uint64_t s = 0; s < (1ull << g.n); ++s) {
        bool ok = true;
        for (uint64_t t = s; t && ok; t &= t - 1) {
            int v = __builtin_ctzll(t);
            ok = (g.adj[v] & s) == 0;
        }
        if (ok) best = std::max(best, __builtin_popcountll(s));
    }
    return best;
}

// Isomorphism by trying every permutation.  Only for n <= 8.
inline bool brute_isomorphic(const g3::SimpleGraph& g, const g3::SimpleGraph& h) {
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < g.n && ok; ++u)
            for (int v = u + 1; v < g.n && ok; ++v)
                ok = g.has_edge(u, v) == h.has_edge(perm[u], perm[v]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline g3::SimpleGraph petersen() {
    // Outer C5 0..4, inner pentagram 5..9, spokes i -- i+5.
    g3::SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

inline g3::SimpleGraph cycle(int n) {
    g3::SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline g3::SimpleGraph path(int n) {
    g3::SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline g3::SimpleGraph complete_bipartite(int a, int b) {
    g3::SimpleGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// Line graph of a simple graph, built edge-by-edge with no shared code with
// the library's line-graph module.
inline g3::SimpleGraph naive_line_graph(const g3::SimpleGraph& h) {
    auto edges = h.edge_list();
    g3::SimpleGraph l(static_cast<int>(edges.size()));
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                l.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return l;
}

// Same dumb pairwise scan for multigraphs; parallel copies share both
// endpoints, hence are adjacent.
inline g3::SimpleGraph naive_line_graph(const g3::Multigraph& h) {
    int m = h.edge_count();
    g3::SimpleGraph l(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = h.edges[i];
            auto [c, d] = h.edges[j];
            if (a == c || a == d || b == c || b == d) l.add_edge(i, j);
        }
    return l;
}

inline g3::Multigraph to_multigraph(const g3::SimpleGraph& g) {
    g3::Multigraph h(g.n);
    for (auto [u, v] : g.edge_list()) h.add_edge(u, v);
    return h;
}

// Random spanning tree plus `extra` edges, each either a fresh random pair or
// (with probability parallel_p) a duplicate of an edge already present.
inline g3::Multigraph random_connected_multigraph(std::mt19937& rng, int n, int extra,
                                                  double parallel_p = 0.3) {
    g3::Multigraph h(n);
    for (int v = 1; v < n; ++v)
        h.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    std::bernoulli_distribution dup(parallel_p);
    for (int i = 0; i < extra && n >= 2; ++i) {
        if (!h.edges.empty() && dup(rng)) {
            auto& e = h.edges[std::uniform_int_distribution<size_t>(0, h.edges.size() - 1)(rng)];
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

// 5-regular, claw-free, every neighborhood induces a 5-cycle.
inline g3::SimpleGraph icosahedron() {
    g3::SimpleGraph g(12);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(0, 1 + i);
        g.add_edge(11, 6 + i);
        g.add_edge(1 + i, 1 + (i + 1) % 5);       // upper ring
        g.add_edge(6 + i, 6 + (i + 1) % 5);       // lower ring
        g.add_edge(1 + i, 6 + i);                 // straight strut
        g.add_edge(1 + i, 6 + (i + 1) % 5);       // slanted strut
    }
    return g;
}

}  // namespace testutil
