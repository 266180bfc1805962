#include "doctest.h"

#include <random>
#include <set>
#include <vector>

#include "g3/invariants.hpp"
#include "g3/linegraph.hpp"
#include "g3/patterns.hpp"
#include "helpers.hpp"

using namespace g3;

namespace {

bool embedding_is_induced(const SimpleGraph& host, const SimpleGraph& pattern,
                          const Embedding& e) {
    if (static_cast<int>(e.map.size()) != pattern.n) return false;
    std::set<int> used;
    for (int v : e.map) {
        if (v < 0 || v >= host.n || used.count(v)) return false;
        used.insert(v);
    }
    for (int i = 0; i < pattern.n; ++i)
        for (int j = i + 1; j < pattern.n; ++j)
            if (pattern.has_edge(i, j) != host.has_edge(e.map[i], e.map[j])) return false;
    return true;
}

SimpleGraph complete_neighborhood(SimpleGraph g, int x) {
    std::vector<int> nb = vertices_from_mask(g.adj[x]);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) g.add_edge(nb[i], nb[j]);
    return g;
}

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Multigraph parallel_edges(int count) {
    Multigraph h(2);
    for (int i = 0; i < count; ++i) h.add_edge(0, 1);
    return h;
}

Multigraph star(int leaves) {
    Multigraph h(leaves + 1);
    for (int i = 1; i <= leaves; ++i) h.add_edge(0, i);
    return h;
}

// Triangle with a pendant edge and its line-graph twin, a double edge with a
// pendant edge at each end.  Both have K4 minus an edge as line graph.
Multigraph triangle_with_pendant() {
    Multigraph h(4);
    h.add_edge(0, 1);
    h.add_edge(0, 2);
    h.add_edge(1, 2);
    h.add_edge(2, 3);
    return h;
}

Multigraph double_edge_with_pendants() {
    Multigraph h(4);
    h.add_edge(0, 1);
    h.add_edge(0, 1);
    h.add_edge(0, 2);
    h.add_edge(1, 3);
    return h;
}

bool edge_is_pendant(const Multigraph& h, int i) {
    return h.degree(h.edges[i].first) == 1 || h.degree(h.edges[i].second) == 1;
}

// Pool of deterministic multigraphs used by several suites below.
std::vector<Multigraph> multigraph_corpus() {
    std::vector<Multigraph> pool;
    pool.push_back(testutil::to_multigraph(testutil::path(2)));
    pool.push_back(testutil::to_multigraph(testutil::path(4)));
    pool.push_back(testutil::to_multigraph(testutil::cycle(3)));
    pool.push_back(testutil::to_multigraph(testutil::cycle(6)));
    pool.push_back(parallel_edges(2));
    pool.push_back(parallel_edges(3));
    pool.push_back(star(5));
    pool.push_back(triangle_with_pendant());
    pool.push_back(double_edge_with_pendants());
    pool.push_back(testutil::to_multigraph(make_wagner_plus()));
    pool.push_back(testutil::to_multigraph(testutil::petersen()));
    std::mt19937 rng(20260816);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + t % 8;
        int extra = t % 7;
        pool.push_back(testutil::random_connected_multigraph(rng, n, extra));
    }
    return pool;
}

}  // namespace

TEST_CASE("line graphs of small graphs match known answers") {
    CHECK(line_graph(testutil::to_multigraph(testutil::path(4))) == testutil::path(3));
    CHECK(line_graph(star(3)) == complete(3));
    CHECK(are_isomorphic(line_graph(testutil::to_multigraph(testutil::cycle(5))),
                         testutil::cycle(5)));
    CHECK(line_graph(star(5)) == complete(5));
    CHECK(line_graph(parallel_edges(2)) == complete(2));
    CHECK(line_graph(parallel_edges(3)) == complete(3));

    // L(K4) is K6 minus a perfect matching: the only disjoint edge pairs of K4
    // are the three complementary ones.
    SimpleGraph lk4 = line_graph(testutil::to_multigraph(complete(4)));
    SimpleGraph octa = complete(6);
    octa.remove_edge(0, 5);
    octa.remove_edge(1, 4);
    octa.remove_edge(2, 3);
    CHECK(lk4.edge_count() == 12);
    CHECK(are_isomorphic(lk4, octa));

    CHECK(are_isomorphic(line_graph(triangle_with_pendant()),
                         line_graph(double_edge_with_pendants())));
    CHECK_FALSE(are_isomorphic(triangle_with_pendant(), double_edge_with_pendants()));

    for (const Multigraph& h : multigraph_corpus())
        CHECK(line_graph(h) == testutil::naive_line_graph(h));

    CHECK_THROWS_AS(line_graph(parallel_edges(65)), Error);
}

TEST_CASE("contraction turns every collapsed copy into a pendant edge") {
    // Triangle: the two surviving edges become parallel, the contracted one a
    // pendant, so the edge count stays 3.
    Multigraph tri_contracted = contract_to_pendant(testutil::to_multigraph(testutil::cycle(3)), 0);
    Multigraph expected_tri(3);
    expected_tri.add_edge(0, 2);
    expected_tri.add_edge(0, 1);
    expected_tri.add_edge(0, 1);
    CHECK(tri_contracted == expected_tri);

    // Double edge: both copies collapse, so the merged vertex carries two
    // pendant edges; its line graph stays K2 as local completion demands.
    Multigraph dbl_contracted = contract_to_pendant(parallel_edges(2), 0);
    Multigraph expected_dbl(3);
    expected_dbl.add_edge(0, 1);
    expected_dbl.add_edge(0, 2);
    CHECK(dbl_contracted == expected_dbl);

    Multigraph p2_contracted = contract_to_pendant(testutil::to_multigraph(testutil::path(2)), 0);
    CHECK(p2_contracted == testutil::to_multigraph(testutil::path(2)));

    Multigraph p4_contracted = contract_to_pendant(testutil::to_multigraph(testutil::path(4)), 1);
    CHECK(are_isomorphic(p4_contracted, star(3)));

    // Contracting edge i commutes with taking line graphs: the result's line
    // graph is exactly the line graph with N(i) completed, indices preserved.
    for (const Multigraph& h : multigraph_corpus()) {
        SimpleGraph lg = line_graph(h);
        for (int i = 0; i < h.edge_count(); ++i)
            CHECK(line_graph(contract_to_pendant(h, i)) == complete_neighborhood(lg, i));
    }

    CHECK_THROWS_AS(contract_to_pendant(parallel_edges(2), -1), Error);
    CHECK_THROWS_AS(contract_to_pendant(parallel_edges(2), 2), Error);
}

TEST_CASE("line graph recognition via the seven obstructions") {
    // The obstruction family is minimal: no member contains another one as an
    // induced subgraph, so each is caught exactly at its own index.
    for (int i = 1; i <= 7; ++i) {
        SimpleGraph gi = make_obstruction(i);
        FreenessReport r = is_line_graph_of_multigraph(gi);
        CHECK_FALSE(r.free);
        CHECK(r.pattern_index == i - 1);
        CHECK(embedding_is_induced(gi, make_obstruction(i), r.witness));
        for (int j = 1; j <= 7; ++j)
            if (j != i) CHECK_FALSE(find_induced(gi, make_obstruction(j)).has_value());
    }

    CHECK_FALSE(is_line_graph_of_multigraph(testutil::petersen()).free);
    CHECK(is_line_graph_of_multigraph(testutil::petersen()).pattern_index == 0);

    // The 5-wheel is claw-free yet not a line graph; it is the obstruction G3
    // itself.
    CHECK(is_line_graph_of_multigraph(make_pattern("W5")).pattern_index == 2);

    for (const Multigraph& h : multigraph_corpus()) {
        FreenessReport r = is_line_graph_of_multigraph(line_graph(h));
        CAPTURE(write_multigraph(h));
        CHECK(r.free);
    }
}

TEST_CASE("normalized preimages of known graphs") {
    CHECK(are_isomorphic(*preimage(complete(3)), star(3)));
    CHECK(are_isomorphic(*preimage(complete(2)), testutil::to_multigraph(testutil::path(3))));
    CHECK(are_isomorphic(*preimage(complete(6)), star(6)));
    CHECK(are_isomorphic(*preimage(complete(1)), testutil::to_multigraph(testutil::path(2))));
    CHECK(are_isomorphic(*preimage(testutil::cycle(6)),
                         testutil::to_multigraph(testutil::cycle(6))));

    // Triangle-with-pendant and double-edge-with-pendants share a line graph;
    // normalization must pick the latter, whose pendant edges line up with the
    // simplicial vertices.
    auto h = preimage(line_graph(triangle_with_pendant()));
    REQUIRE(h.has_value());
    CHECK(are_isomorphic(*h, double_edge_with_pendants()));
    CHECK_FALSE(are_isomorphic(*h, triangle_with_pendant()));

    auto wplus = preimage(line_graph(testutil::to_multigraph(make_wagner_plus())));
    REQUIRE(wplus.has_value());
    CHECK(are_isomorphic(*wplus, testutil::to_multigraph(make_wagner_plus())));

    CHECK_FALSE(preimage(make_pattern("W5")).has_value());
    CHECK_FALSE(preimage(make_pattern("claw")).has_value());
    CHECK_FALSE(preimage(testutil::petersen()).has_value());

    SimpleGraph two_triangles(6);
    for (int base : {0, 3}) {
        two_triangles.add_edge(base, base + 1);
        two_triangles.add_edge(base, base + 2);
        two_triangles.add_edge(base + 1, base + 2);
    }
    CHECK_THROWS_AS(preimage(two_triangles), Error);
}

TEST_CASE("preimage round trip and the pendant-simplicial correspondence") {
    for (const Multigraph& h : multigraph_corpus()) {
        SimpleGraph g = line_graph(h);
        CAPTURE(write_multigraph(h));
        auto back = preimage(g);
        REQUIRE(back.has_value());
        // Edges of the preimage are indexed by the vertices of g, so the round
        // trip reproduces g exactly, not just up to isomorphism.
        CHECK(line_graph(*back) == g);
        for (int i = 0; i < back->edge_count(); ++i)
            CHECK(edge_is_pendant(*back, i) == neighborhood_is_clique(g, i));
    }

    // Triangle-free preimages already satisfy the pendant condition, so the
    // round trip recovers them up to isomorphism.
    std::vector<SimpleGraph> triangle_free = {
        testutil::cycle(4),          testutil::cycle(7),
        testutil::path(6),           testutil::complete_bipartite(2, 3),
        testutil::complete_bipartite(3, 3),
        testutil::petersen(),        make_wagner_plus(),
    };
    for (const SimpleGraph& s : triangle_free) {
        auto back = preimage(testutil::naive_line_graph(s));
        REQUIRE(back.has_value());
        CHECK(are_isomorphic(*back, testutil::to_multigraph(s)));
    }
}

TEST_CASE("recognition and preimage agree on random graphs") {
    std::mt19937 rng(7151);
    int line_graphs_seen = 0;
    for (int t = 0; t < 80; ++t) {
        SimpleGraph g = testutil::random_graph(rng, 4 + t % 5, 0.25 + 0.1 * (t % 6));
        if (!is_connected(g)) continue;
        bool free = is_line_graph_of_multigraph(g).free;
        CAPTURE(write_graph6(g));
        CHECK(free == preimage(g).has_value());
        line_graphs_seen += free;
    }
    CHECK(line_graphs_seen > 4);
}

TEST_CASE("preimage is deterministic and honors its budget") {
    SimpleGraph g = line_graph(testutil::to_multigraph(make_wagner_plus()));
    CHECK(*preimage(g) == *preimage(g));

    try {
        preimage(g, 10);
        FAIL("budget not enforced");
    } catch (const Error& e) {
        CHECK(e.kind == Error::Kind::Budget);
    }
}

TEST_CASE("essential edge connectivity") {
    // Stars and triangles have no two disjoint edges left after any removal,
    // so they are essentially k-edge-connected for every k.
    for (int k = 1; k <= 6; ++k) {
        CHECK(is_essentially_k_edge_connected(star(5), k));
        CHECK(is_essentially_k_edge_connected(testutil::to_multigraph(testutil::cycle(3)), k));
        CHECK(is_essentially_k_edge_connected(parallel_edges(2), k));
    }

    Multigraph c4 = testutil::to_multigraph(testutil::cycle(4));
    CHECK(is_essentially_k_edge_connected(c4, 2));
    CHECK_FALSE(is_essentially_k_edge_connected(c4, 3));

    Multigraph wplus = testutil::to_multigraph(make_wagner_plus());
    CHECK(is_essentially_k_edge_connected(wplus, 3));
    CHECK_FALSE(is_essentially_k_edge_connected(wplus, 4));

    Multigraph h2 = double_edge_with_pendants();
    CHECK(is_essentially_k_edge_connected(h2, 2));
    CHECK_FALSE(is_essentially_k_edge_connected(h2, 3));

    CHECK_THROWS_AS(is_essentially_k_edge_connected(c4, 0), Error);

    // For noncomplete line graphs, vertex connectivity of L(H) equals the
    // essential edge connectivity of H.
    for (const Multigraph& h : multigraph_corpus()) {
        SimpleGraph g = line_graph(h);
        if (g.edge_count() == g.n * (g.n - 1) / 2) continue;
        int kappa = vertex_connectivity(g);
        CAPTURE(write_multigraph(h));
        for (int k = 1; k <= 4; ++k)
            CHECK(is_essentially_k_edge_connected(h, k) == (kappa >= k));
    }
}
