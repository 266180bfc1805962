#include "g3/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace g3 {

namespace {

// --- max flow (Dinic) on the vertex-split network, unit vertex capacities ---

struct FlowNet {
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level, iter;

    explicit FlowNet(int nodes) : arcs(nodes) {}

    void add(int from, int to, int cap) {
        arcs[from].push_back({to, static_cast<int>(arcs[to].size()), cap});
        arcs[to].push_back({from, static_cast<int>(arcs[from].size()) - 1, 0});
    }

    bool bfs(int s, int t) {
        level.assign(arcs.size(), -1);
        std::vector<int> queue{s};
        level[s] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (auto& a : arcs[v])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    queue.push_back(a.to);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(arcs[v].size()); ++i) {
            Arc& a = arcs[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int max_flow(int s, int t, int cap_limit) {
        int flow = 0;
        while (flow < cap_limit && bfs(s, t)) {
            iter.assign(arcs.size(), 0);
            int f;
            while (flow < cap_limit && (f = dfs(s, t, cap_limit - flow)) > 0) flow += f;
        }
        return flow;
    }
};

// Minimum vertex cut separating nonadjacent s and t: split every vertex into
// in/out with unit capacity and run max flow from s_out to t_in.
int min_vertex_cut(const SimpleGraph& g, int s, int t) {
    const int INF = g.n + 1;
    FlowNet net(2 * g.n);
    for (int v = 0; v < g.n; ++v) net.add(2 * v, 2 * v + 1, 1);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (g.has_edge(u, v)) net.add(2 * u + 1, 2 * v, INF);
    return net.max_flow(2 * s + 1, 2 * t, INF);
}

}  // namespace

int vertex_connectivity(const SimpleGraph& g) {
    if (g.n <= 1) return 0;
    if (g.is_complete()) return g.n - 1;
    int best = g.n - 1;
    for (int s = 0; s < g.n; ++s)
        for (int t = s + 1; t < g.n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, min_vertex_cut(g, s, t));
    return best;
}

namespace {

// Greedy clique cover of the vertices in `avail`; its size bounds the
// independence number of the induced subgraph from above.
int clique_cover_bound(const SimpleGraph& g, uint64_t avail) {
    int cliques = 0;
    while (avail) {
        int v = __builtin_ctzll(avail);
        avail &= ~(1ull << v);
        uint64_t common = g.adj[v] & avail;
        while (common) {
            int w = __builtin_ctzll(common);
            avail &= ~(1ull << w);
            common &= g.adj[w] & ~(1ull << w);
        }
        ++cliques;
    }
    return cliques;
}

struct IndepSearch {
    const SimpleGraph& g;
    int bound;
    int best = 0;
    long nodes = 0;
    static constexpr long NODE_CAP = 50'000'000;

    void expand(uint64_t avail, int size) {
        if (++nodes > NODE_CAP)
            fail(Error::Kind::Budget, "independence number search exceeded node budget");
        // Vertices isolated within `avail` always join the set.
        for (;;) {
            bool again = false;
            uint64_t scan = avail;
            while (scan) {
                int v = __builtin_ctzll(scan);
                scan &= scan - 1;
                if ((g.adj[v] & avail) == 0) {
                    avail &= ~(1ull << v);
                    ++size;
                    again = true;
                }
            }
            if (!again) break;
        }
        if (size > best) {
            best = size;
            if (best > bound)
                fail(Error::Kind::Budget, "independence number exceeds bound " +
                                              std::to_string(bound));
        }
        if (!avail) return;
        if (size + clique_cover_bound(g, avail) <= best) return;
        // Branch on a vertex of maximum degree inside `avail`.
        int pick = -1, pick_deg = -1;
        uint64_t scan = avail;
        while (scan) {
            int v = __builtin_ctzll(scan);
            scan &= scan - 1;
            int d = __builtin_popcountll(g.adj[v] & avail);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        expand(avail & ~(g.adj[pick] | (1ull << pick)), size + 1);
        expand(avail & ~(1ull << pick), size);
    }
};

}  // namespace

int independence_number(const SimpleGraph& g, int bound) {
    IndepSearch search{g, bound};
    search.expand(g.vertex_mask(), 0);
    return search.best;
}

namespace {

// --- canonical labeling by refinement + individualization ---

// One round of color refinement across one or two graphs at once: the new
// color of a vertex is the rank of (old color, sorted neighbor colors) among
// all such signatures, so color ids are comparable between the graphs.
using Signature = std::pair<int, std::vector<int>>;

std::vector<int> neighbor_signature(const SimpleGraph& g, int v, const std::vector<int>& col) {
    std::vector<int> sig;
    uint64_t m = g.adj[v];
    while (m) {
        int w = __builtin_ctzll(m);
        m &= m - 1;
        sig.push_back(col[w]);
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

int count_colors(const std::vector<int>& col) {
    if (col.empty()) return 0;
    return *std::max_element(col.begin(), col.end()) + 1;
}

// Refine until stable.  Works on a list of (graph, coloring) pairs sharing
// one color space.
void refine_joint(std::vector<std::pair<const SimpleGraph*, std::vector<int>*>> items) {
    size_t total = 0;
    for (auto& it : items) total += it.second->size();
    int ncolors = -1;
    for (;;) {
        // Signatures must be fully collected before any color is rewritten.
        std::map<Signature, int> rank;
        std::vector<std::vector<Signature>> sigs(items.size());
        for (size_t k = 0; k < items.size(); ++k) {
            const SimpleGraph& g = *items[k].first;
            const std::vector<int>& col = *items[k].second;
            for (int v = 0; v < g.n; ++v) {
                sigs[k].push_back({col[v], neighbor_signature(g, v, col)});
                rank[sigs[k].back()] = 0;
            }
        }
        int next = 0;
        for (auto& kv : rank) kv.second = next++;
        for (size_t k = 0; k < items.size(); ++k)
            for (int v = 0; v < items[k].first->n; ++v) (*items[k].second)[v] = rank[sigs[k][v]];
        if (next == ncolors || static_cast<size_t>(next) == total) return;
        ncolors = next;
    }
}

void refine_single(const SimpleGraph& g, std::vector<int>& col) {
    refine_joint({{&g, &col}});
}

std::vector<int> initial_colors(const SimpleGraph& g, const VertexColoring* colors) {
    if (!colors) return std::vector<int>(g.n, 0);
    if (static_cast<int>(colors->size()) != g.n)
        fail(Error::Kind::Precondition, "coloring size does not match graph order");
    // Normalize to dense ranks but keep the relative order of values: callers
    // use one shared value scheme across graphs.
    std::vector<int> vals = *colors;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<int> out(g.n);
    for (int v = 0; v < g.n; ++v)
        out[v] = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), (*colors)[v]) -
                                  vals.begin());
    return out;
}

// u and v are interchangeable whenever their neighborhoods agree off {u,v};
// the transposition is then an automorphism and one branch suffices.
bool are_twins(const SimpleGraph& g, int u, int v) {
    return (g.adj[u] & ~(1ull << v)) == (g.adj[v] & ~(1ull << u));
}

struct CanonSearch {
    const SimpleGraph& g;
    const std::vector<int>& input_colors;
    std::string best;
    std::vector<int> best_perm;
    bool have_best = false;
    long leaves = 0;
    static constexpr long LEAF_CAP = 1'000'000;

    CanonSearch(const SimpleGraph& g_, const std::vector<int>& colors_)
        : g(g_), input_colors(colors_) {}

    void emit_leaf(const std::vector<int>& col) {
        if (++leaves > LEAF_CAP)
            fail(Error::Kind::Budget, "canonical form search exceeded leaf budget");
        std::vector<int> perm(g.n);
        for (int v = 0; v < g.n; ++v) perm[col[v]] = v;
        SimpleGraph rel(g.n);
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                if (g.has_edge(perm[i], perm[j])) rel.add_edge(i, j);
        std::string s = write_graph6(rel);
        if (!input_colors.empty() &&
            *std::max_element(input_colors.begin(), input_colors.end()) > 0) {
            s += "|";
            for (int i = 0; i < g.n; ++i) {
                if (i) s += ",";
                s += std::to_string(input_colors[perm[i]]);
            }
        }
        if (!have_best || s < best) {
            best = s;
            best_perm = perm;
            have_best = true;
        }
    }

    void recurse(std::vector<int> col) {
        refine_single(g, col);
        int ncolors = count_colors(col);
        if (ncolors == g.n) {
            emit_leaf(col);
            return;
        }
        // First color class with more than one member, in color order.
        int target = -1;
        std::vector<int> members;
        for (int c = 0; c < ncolors && target < 0; ++c) {
            members.clear();
            for (int v = 0; v < g.n; ++v)
                if (col[v] == c) members.push_back(v);
            if (members.size() > 1) target = c;
        }
        std::vector<int> tried;
        for (int v : members) {
            bool redundant = false;
            for (int u : tried)
                if (are_twins(g, u, v)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            tried.push_back(v);
            std::vector<int> child(g.n);
            for (int w = 0; w < g.n; ++w) child[w] = 2 * col[w];
            child[v] += 1;
            recurse(std::move(child));
        }
    }
};

std::pair<std::string, std::vector<int>> canonical_impl(const SimpleGraph& g,
                                                        const VertexColoring* colors) {
    std::vector<int> init = initial_colors(g, colors);
    if (g.n == 0) return {write_graph6(g), {}};
    CanonSearch search{g, init};
    search.recurse(init);
    return {search.best, search.best_perm};
}

}  // namespace

std::string canonical_form(const SimpleGraph& g, const VertexColoring* colors) {
    return canonical_impl(g, colors).first;
}

std::vector<int> canonical_order(const SimpleGraph& g, const VertexColoring* colors) {
    return canonical_impl(g, colors).second;
}

namespace {

// Backtracking search for color-preserving isomorphisms g -> h.  `col_g` and
// `col_h` come from joint refinement, so equal ids mean compatible vertices.
// Vertices of g are assigned in an order that maximizes placed neighbors, so
// adjacency constraints prune right away; assigning in raw index order lets
// bipartite-ish inputs (such as incidence encodings) run unconstrained for
// half the depth before the first edge check fires.
struct IsoSearch {
    const SimpleGraph& g;
    const SimpleGraph& h;
    const std::vector<int>& col_g;
    const std::vector<int>& col_h;
    std::vector<int> image;
    std::vector<int> order;
    uint64_t used = 0;
    bool collect_all;
    std::vector<std::vector<int>> found;
    long nodes = 0;
    static constexpr long NODE_CAP = 20'000'000;
    static constexpr size_t GROUP_CAP = 1 << 20;

    IsoSearch(const SimpleGraph& g_, const SimpleGraph& h_, const std::vector<int>& cg,
              const std::vector<int>& ch, bool all)
        : g(g_), h(h_), col_g(cg), col_h(ch), image(g_.n, -1), collect_all(all) {
        std::vector<int> class_size(g.n ? *std::max_element(cg.begin(), cg.end()) + 1 : 0, 0);
        for (int c : cg) ++class_size[c];
        uint64_t done = 0;
        for (int step = 0; step < g.n; ++step) {
            int pick = -1;
            std::pair<int, int> pick_key{-1, 0};
            for (int v = 0; v < g.n; ++v) {
                if ((done >> v) & 1) continue;
                std::pair<int, int> key{__builtin_popcountll(g.adj[v] & done),
                                        -class_size[col_g[v]]};
                if (pick < 0 || key > pick_key) {
                    pick = v;
                    pick_key = key;
                }
            }
            order.push_back(pick);
            done |= 1ull << pick;
        }
    }

    bool search(int depth) {
        if (++nodes > NODE_CAP)
            fail(Error::Kind::Budget, "isomorphism search exceeded node budget");
        if (depth == g.n) {
            found.push_back(image);
            if (found.size() > GROUP_CAP)
                fail(Error::Kind::Budget, "automorphism group too large to materialize");
            return !collect_all;
        }
        int v = order[depth];
        for (int w = 0; w < h.n; ++w) {
            if ((used >> w) & 1) continue;
            if (col_g[v] != col_h[w]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d)
                ok = g.has_edge(order[d], v) == h.has_edge(image[order[d]], w);
            if (!ok) continue;
            image[v] = w;
            used |= 1ull << w;
            if (search(depth + 1)) return true;
            used &= ~(1ull << w);
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                                          const VertexColoring* gcolors,
                                          const VertexColoring* hcolors) {
    if (g.n != h.n || g.edge_count() != h.edge_count()) return std::nullopt;
    if ((gcolors == nullptr) != (hcolors == nullptr))
        fail(Error::Kind::Precondition, "colors must be given for both graphs or neither");
    std::vector<int> col_g, col_h;
    if (gcolors) {
        if (static_cast<int>(gcolors->size()) != g.n ||
            static_cast<int>(hcolors->size()) != h.n)
            fail(Error::Kind::Precondition, "coloring size does not match graph order");
        col_g = *gcolors;
        col_h = *hcolors;
    } else {
        col_g.assign(g.n, 0);
        col_h.assign(h.n, 0);
    }
    refine_joint({{&g, &col_g}, {&h, &col_h}});
    // Color class sizes must agree.
    {
        int ncolors = std::max(count_colors(col_g), count_colors(col_h));
        std::vector<int> cg(ncolors, 0), ch(ncolors, 0);
        for (int c : col_g) ++cg[c];
        for (int c : col_h) ++ch[c];
        if (cg != ch) return std::nullopt;
    }
    IsoSearch search(g, h, col_g, col_h, false);
    if (!search.search(0)) return std::nullopt;
    return Embedding{search.found.front()};
}

bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
    return find_isomorphism(g, h).has_value();
}

std::vector<std::vector<int>> automorphisms(const SimpleGraph& g, const VertexColoring* colors) {
    std::vector<int> col = initial_colors(g, colors);
    refine_single(g, col);
    IsoSearch search(g, g, col, col, true);
    search.search(0);
    return search.found;
}

namespace {

// Colored incidence encoding of a loopless multigraph: one node per vertex
// (color 0), one node per edge (color 1), edge nodes joined to their two
// endpoints.  Color-preserving isomorphism of the encodings is exactly
// multigraph isomorphism, parallel edges included.
std::pair<SimpleGraph, VertexColoring> incidence_encoding(const Multigraph& h) {
    int total = h.n + h.edge_count();
    if (total > SimpleGraph::MAX_N)
        fail(Error::Kind::Precondition,
             "multigraph too large for canonical encoding: needs " + std::to_string(total) +
                 " nodes");
    SimpleGraph g(total);
    for (int i = 0; i < h.edge_count(); ++i) {
        g.add_edge(h.n + i, h.edges[i].first);
        g.add_edge(h.n + i, h.edges[i].second);
    }
    VertexColoring colors(total, 0);
    for (int i = h.n; i < total; ++i) colors[i] = 1;
    return {g, colors};
}

}  // namespace

bool are_isomorphic(const Multigraph& g, const Multigraph& h) {
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
    auto [eg, cg] = incidence_encoding(g);
    auto [eh, ch] = incidence_encoding(h);
    return find_isomorphism(eg, eh, &cg, &ch).has_value();
}

std::string canonical_form(const Multigraph& g) {
    auto [eg, cg] = incidence_encoding(g);
    return canonical_form(eg, &cg);
}

}  // namespace g3
