#include "g3/detect.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace g3 {

namespace {

constexpr uint64_t bit(int v) { return uint64_t{1} << v; }

struct InducedSearch {
    const SimpleGraph& host;
    const SimpleGraph& pattern;
    std::vector<int> order;       // pattern vertices, descending degree
    std::vector<uint64_t> cand;   // per pattern vertex, viable host images
    std::vector<int> image;

    InducedSearch(const SimpleGraph& h, const SimpleGraph& p) : host(h), pattern(p) {
        order.resize(pattern.n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
        cand.assign(pattern.n, 0);
        for (int p_v = 0; p_v < pattern.n; ++p_v)
            for (int h_v = 0; h_v < host.n; ++h_v)
                if (host.degree(h_v) >= pattern.degree(p_v)) cand[p_v] |= bit(h_v);
        image.assign(pattern.n, -1);
    }

    bool run(int depth) {
        if (depth == pattern.n) return true;
        int p = order[depth];
        uint64_t options = cand[p];
        while (options) {
            int v = std::countr_zero(options);
            options &= options - 1;
            image[p] = v;
            // Forward-check the not-yet-placed vertices against this choice.
            std::vector<std::pair<int, uint64_t>> saved;
            bool viable = true;
            for (int later = depth + 1; later < pattern.n; ++later) {
                int q = order[later];
                saved.push_back({q, cand[q]});
                uint64_t allowed =
                    pattern.has_edge(p, q) ? host.adj[v] : ~(host.adj[v] | bit(v));
                cand[q] &= allowed & ~bit(v);
                if (cand[q] == 0) {
                    viable = false;
                    break;
                }
            }
            if (viable && run(depth + 1)) return true;
            for (auto [q, m] : saved) cand[q] = m;
            image[p] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_induced(const SimpleGraph& host, const SimpleGraph& pattern,
                                      const std::vector<std::pair<int, int>>& anchor) {
    uint64_t anchored_pat = 0, anchored_host = 0;
    for (auto [p, v] : anchor) {
        pattern.check_vertex(p);
        host.check_vertex(v);
        if (anchored_pat & bit(p))
            fail(Error::Kind::Precondition, "anchor assigns pattern vertex twice");
        if (anchored_host & bit(v)) fail(Error::Kind::Precondition, "anchor is not injective");
        anchored_pat |= bit(p);
        anchored_host |= bit(v);
    }
    if (pattern.n == 0) return Embedding{};
    if (pattern.n > host.n) return std::nullopt;

    InducedSearch search(host, pattern);
    for (auto [p, v] : anchor) search.cand[p] &= bit(v);
    if (!search.run(0)) return std::nullopt;
    return Embedding{search.image};
}

FreenessReport is_free(const SimpleGraph& host, const std::vector<SimpleGraph>& patterns) {
    for (size_t i = 0; i < patterns.size(); ++i) {
        auto hit = find_induced(host, patterns[i], {});
        if (hit) return {false, static_cast<int>(i), *hit};
    }
    return {};
}

namespace {

// Clause searches for find_endgame.  Each walks tuples of neighbors of x in
// ascending order, pruned to one representative per tuple symmetry.

std::optional<std::vector<int>> endgame_triple(const SimpleGraph& g, const std::vector<int>& nb) {
    int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            if (g.has_edge(nb[i], nb[j])) continue;
            for (int k = j + 1; k < d; ++k)
                if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]))
                    return std::vector<int>{nb[i], nb[j], nb[k]};
        }
    return std::nullopt;
}

std::optional<std::vector<int>> endgame_square(const SimpleGraph& g, const std::vector<int>& nb) {
    // Induced 4-cycle x1x2x3x4; canonical form: x1 least, x2 < x4.
    int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            if (!g.has_edge(nb[i], nb[j])) continue;
            for (int l = j + 1; l < d; ++l) {
                if (!g.has_edge(nb[i], nb[l]) || g.has_edge(nb[j], nb[l])) continue;
                for (int k = i + 1; k < d; ++k) {
                    if (k == j || k == l) continue;
                    if (g.has_edge(nb[k], nb[j]) && g.has_edge(nb[k], nb[l]) &&
                        !g.has_edge(nb[k], nb[i]))
                        return std::vector<int>{nb[i], nb[j], nb[k], nb[l]};
                }
            }
        }
    return std::nullopt;
}

std::optional<std::vector<int>> endgame_antihole(const SimpleGraph& g,
                                                 const std::vector<int>& nb) {
    // Five vertices whose cyclic consecutive pairs are all non-edges;
    // canonical form: x1 least, x2 < x5.
    int d = static_cast<int>(nb.size());
    for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = i1 + 1; i2 < d; ++i2) {
            if (g.has_edge(nb[i1], nb[i2])) continue;
            for (int i3 = i1 + 1; i3 < d; ++i3) {
                if (i3 == i2 || g.has_edge(nb[i2], nb[i3])) continue;
                for (int i4 = i1 + 1; i4 < d; ++i4) {
                    if (i4 == i2 || i4 == i3 || g.has_edge(nb[i3], nb[i4])) continue;
                    for (int i5 = i2 + 1; i5 < d; ++i5) {
                        if (i5 == i3 || i5 == i4) continue;
                        if (!g.has_edge(nb[i4], nb[i5]) && !g.has_edge(nb[i5], nb[i1]))
                            return std::vector<int>{nb[i1], nb[i2], nb[i3], nb[i4], nb[i5]};
                    }
                }
            }
        }
    return std::nullopt;
}

std::optional<std::vector<int>> endgame_bridged_path(const SimpleGraph& g,
                                                     const std::vector<int>& nb) {
    // Non-edges x1x2,x2x3,x3x4,x4x5 plus edges x1x4,x2x5; symmetric under
    // reversal, so x1 < x5.
    int d = static_cast<int>(nb.size());
    for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = 0; i2 < d; ++i2) {
            if (i2 == i1 || g.has_edge(nb[i1], nb[i2])) continue;
            for (int i3 = 0; i3 < d; ++i3) {
                if (i3 == i1 || i3 == i2 || g.has_edge(nb[i2], nb[i3])) continue;
                for (int i4 = 0; i4 < d; ++i4) {
                    if (i4 == i1 || i4 == i2 || i4 == i3) continue;
                    if (g.has_edge(nb[i3], nb[i4]) || !g.has_edge(nb[i1], nb[i4])) continue;
                    for (int i5 = i1 + 1; i5 < d; ++i5) {
                        if (i5 == i2 || i5 == i3 || i5 == i4) continue;
                        if (!g.has_edge(nb[i4], nb[i5]) && g.has_edge(nb[i2], nb[i5]))
                            return std::vector<int>{nb[i1], nb[i2], nb[i3], nb[i4], nb[i5]};
                    }
                }
            }
        }
    return std::nullopt;
}

std::optional<std::vector<int>> endgame_crossed_path(const SimpleGraph& g,
                                                     const std::vector<int>& nb) {
    // Non-edges x2x3,x3x4,x1x5 plus edges x2x5,x5x3,x3x1,x1x4; symmetric
    // under (x1 x5)(x2 x4), so x1 < x5.
    int d = static_cast<int>(nb.size());
    for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = 0; i2 < d; ++i2) {
            if (i2 == i1) continue;
            for (int i3 = 0; i3 < d; ++i3) {
                if (i3 == i1 || i3 == i2) continue;
                if (g.has_edge(nb[i2], nb[i3]) || !g.has_edge(nb[i3], nb[i1])) continue;
                for (int i4 = 0; i4 < d; ++i4) {
                    if (i4 == i1 || i4 == i2 || i4 == i3) continue;
                    if (g.has_edge(nb[i3], nb[i4]) || !g.has_edge(nb[i1], nb[i4])) continue;
                    for (int i5 = i1 + 1; i5 < d; ++i5) {
                        if (i5 == i2 || i5 == i3 || i5 == i4) continue;
                        if (!g.has_edge(nb[i1], nb[i5]) && g.has_edge(nb[i2], nb[i5]) &&
                            g.has_edge(nb[i5], nb[i3]))
                            return std::vector<int>{nb[i1], nb[i2], nb[i3], nb[i4], nb[i5]};
                    }
                }
            }
        }
    return std::nullopt;
}

}  // namespace

std::optional<EndgameWitness> find_endgame(const SimpleGraph& g, int x) {
    g.check_vertex(x);
    std::vector<int> nb = vertices_from_mask(g.adj[x]);
    using Finder = std::optional<std::vector<int>> (*)(const SimpleGraph&,
                                                       const std::vector<int>&);
    const Finder finders[] = {endgame_triple, endgame_square, endgame_antihole,
                              endgame_bridged_path, endgame_crossed_path};
    for (int kind = 1; kind <= 5; ++kind) {
        auto found = finders[kind - 1](g, nb);
        if (found) return EndgameWitness{kind, *found};
    }
    return std::nullopt;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> two_clique_cover(
    const SimpleGraph& g, int x) {
    g.check_vertex(x);
    std::vector<int> nb = vertices_from_mask(g.adj[x]);
    uint64_t nmask = g.adj[x];
    // 2-color the complement of the induced neighborhood; a color class has
    // no complement edges, so it is a clique of g.
    std::vector<int> color(g.n, -1);
    for (int root : nb) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::vector<int> queue = {root};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            uint64_t co_nbrs = nmask & ~g.adj[u] & ~bit(u);
            while (co_nbrs) {
                int w = std::countr_zero(co_nbrs);
                co_nbrs &= co_nbrs - 1;
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> cover;
    for (int v : nb) (color[v] == 0 ? cover.first : cover.second).push_back(v);
    return cover;
}

bool neighborhood_has_induced_C5(const SimpleGraph& g, int x) {
    g.check_vertex(x);
    SimpleGraph hood = induced_subgraph(g, g.adj[x]);
    SimpleGraph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    return find_induced(hood, c5, {}).has_value();
}

}  // namespace g3
