#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "g3/graph.hpp"
#include "g3/hamilton.hpp"
#include "g3/invariants.hpp"
#include "g3/patterns.hpp"
#include "helpers.hpp"

using namespace g3;

namespace {

bool valid_ham_path(const SimpleGraph& g, const std::vector<int>& p, int u, int v) {
    if (static_cast<int>(p.size()) != g.n) return false;
    if (p.front() != u || p.back() != v) return false;
    std::set<int> seen(p.begin(), p.end());
    if (static_cast<int>(seen.size()) != g.n) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

// Oracle: try every ordering of the interior vertices.
bool brute_ham_path(const SimpleGraph& g, int u, int v) {
    std::vector<int> mid;
    for (int w = 0; w < g.n; ++w)
        if (w != u && w != v) mid.push_back(w);
    do {
        int prev = u;
        bool ok = true;
        for (int w : mid) {
            if (!g.has_edge(prev, w)) {
                ok = false;
                break;
            }
            prev = w;
        }
        if (ok && g.has_edge(prev, v)) return true;
    } while (std::next_permutation(mid.begin(), mid.end()));
    return false;
}

bool brute_hamiltonian(const SimpleGraph& g) {
    if (g.n < 3) return false;
    std::vector<int> rest(g.n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        int prev = 0;
        bool ok = true;
        for (int w : rest) {
            if (!g.has_edge(prev, w)) {
                ok = false;
                break;
            }
            prev = w;
        }
        if (ok && g.has_edge(prev, 0)) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

}  // namespace

TEST_CASE("path search on canonical small graphs") {
    SimpleGraph c5 = testutil::cycle(5);
    auto around = has_ham_path(c5, 0, 1);
    REQUIRE(around.has_value());
    CHECK(valid_ham_path(c5, *around, 0, 1));
    CHECK(has_ham_path(c5, 0, 2) == std::nullopt);

    SimpleGraph k4 = SimpleGraph::complete(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
            auto p = has_ham_path(k4, u, v);
            REQUIRE(p.has_value());
            CHECK(valid_ham_path(k4, *p, u, v));
        }

    CHECK_THROWS_AS(has_ham_path(c5, 2, 2), Error);
    CHECK_THROWS_AS(has_ham_path(c5, 0, 9), Error);

    // Disconnected hosts have no spanning path at all.
    SimpleGraph split(6);
    split.add_edge(0, 1);
    split.add_edge(1, 2);
    split.add_edge(3, 4);
    split.add_edge(4, 5);
    CHECK(has_ham_path(split, 0, 5) == std::nullopt);
}

TEST_CASE("path search agrees with permutation brute force") {
    std::mt19937 rng(7321);
    int exists = 0, absent = 0;
    for (int t = 0; t < 36; ++t) {
        int n = 4 + t % 5;
        SimpleGraph g = testutil::random_graph(rng, n, 0.25 + 0.08 * (t % 7));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                auto got = has_ham_path(g, u, v);
                CHECK(got.has_value() == brute_ham_path(g, u, v));
                if (got) {
                    CHECK(valid_ham_path(g, *got, u, v));
                    ++exists;
                } else {
                    ++absent;
                }
            }
    }
    CHECK(exists > 100);
    CHECK(absent > 100);

    // A couple of larger instances against the same oracle.
    for (int t = 0; t < 3; ++t) {
        SimpleGraph g = testutil::random_graph(rng, 10, 0.35 + 0.1 * t);
        for (int v = 1; v < 10; ++v) {
            auto got = has_ham_path(g, 0, v);
            CHECK(got.has_value() == brute_ham_path(g, 0, v));
        }
    }
}

TEST_CASE("hamiltonian cycle detection") {
    CHECK(is_hamiltonian(testutil::cycle(6)));
    CHECK(is_hamiltonian(SimpleGraph::complete(5)));
    CHECK(is_hamiltonian(make_claw()) == false);
    CHECK(is_hamiltonian(make_gamma(0)) == false);  // cut vertex
    CHECK(is_hamiltonian(testutil::petersen()) == false);
    CHECK(is_hamiltonian(testutil::path(2)) == false);

    std::mt19937 rng(553);
    for (int t = 0; t < 40; ++t) {
        SimpleGraph g = testutil::random_graph(rng, 5 + t % 4, 0.3 + 0.09 * (t % 6));
        CHECK(is_hamiltonian(g) == brute_hamiltonian(g));
    }
}

TEST_CASE("hamilton connectivity verdicts") {
    auto k5 = is_hamilton_connected(SimpleGraph::complete(5));
    CHECK(k5.connected);
    CHECK(!k5.failing_pair.has_value());
    CHECK(k5.witness_paths.size() == 10);
    for (auto& [pair, path] : k5.witness_paths)
        CHECK(valid_ham_path(SimpleGraph::complete(5), path, pair.first, pair.second));

    auto c5 = is_hamilton_connected(testutil::cycle(5));
    CHECK(c5.connected == false);
    REQUIRE(c5.failing_pair.has_value());
    CHECK(*c5.failing_pair == std::pair<int, int>{0, 2});
    CHECK(c5.witness_paths.count({0, 1}) == 1);

    CHECK(is_hamilton_connected(testutil::path(2)).connected);
    CHECK(is_hamilton_connected(make_wheel(5)).connected);

    SimpleGraph lonely(2);
    auto verdict = is_hamilton_connected(lonely);
    CHECK(verdict.connected == false);
    CHECK(*verdict.failing_pair == std::pair<int, int>{0, 1});
}

TEST_CASE("pendant line graph of the eight-spoke frame is not hamilton connected") {
    SimpleGraph lwp = testutil::naive_line_graph(make_wagner_plus());
    REQUIRE(lwp.n == 20);
    auto verdict = is_hamilton_connected(lwp);
    CHECK(verdict.connected == false);
    REQUIRE(verdict.failing_pair.has_value());
    auto [a, b] = *verdict.failing_pair;
    CHECK(has_ham_path(lwp, a, b) == std::nullopt);
}

TEST_CASE("sufficient connectivity beats independence: hamilton connectedness") {
    std::mt19937 rng(88);
    int qualified = 0;
    for (int t = 0; t < 80 && qualified < 25; ++t) {
        int n = 5 + t % 6;
        SimpleGraph g = testutil::random_graph(rng, n, 0.62 + 0.05 * (t % 4));
        int kappa = vertex_connectivity(g);
        if (kappa == 0 || independence_number(g) >= kappa) continue;
        ++qualified;
        CAPTURE(write_graph6(g));
        CHECK(is_hamilton_connected(g).connected);
    }
    CHECK(qualified >= 25);
}

TEST_CASE("search budget exhaustion is an error, not a hang") {
    CHECK_THROWS_AS(has_ham_path(testutil::cycle(8), 0, 1, 3), Error);
    CHECK_THROWS_AS(is_hamiltonian(testutil::petersen(), 2), Error);
    try {
        has_ham_path(testutil::cycle(8), 0, 1, 3);
    } catch (const Error& e) {
        CHECK(e.kind == Error::Kind::Budget);
    }
}
