#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "g3/detect.hpp"
#include "g3/enumerate.hpp"
#include "g3/graph.hpp"
#include "g3/patterns.hpp"
#include "g3/util.hpp"
#include "helpers.hpp"

using namespace g3;

namespace {

// Independent oracle: walk all 2^K completions and keep those the plain
// freeness scan accepts.  Returns sorted edge-index sets.
std::vector<std::vector<int>> naive_survivors(const EnumerationTask& task) {
    std::vector<SimpleGraph> filters = task.filters;
    if (filters.empty()) filters = {make_claw(), make_gamma(3), make_wheel(5)};
    int k = static_cast<int>(task.free_pairs.size());
    REQUIRE(k <= 20);
    std::vector<std::vector<int>> out;
    for (uint64_t m = 0; m < (1ull << k); ++m) {
        SimpleGraph g = task.base;
        std::vector<int> idxs;
        for (int i = 0; i < k; ++i)
            if ((m >> i) & 1) {
                g.add_edge(task.free_pairs[i].first, task.free_pairs[i].second);
                idxs.push_back(i);
            }
        if (is_free(g, filters).free) out.push_back(idxs);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> engine_sets(const EnumerationReport& rep) {
    std::vector<std::vector<int>> out;
    for (const auto& s : rep.survivors) out.push_back(s.pair_indices);
    return out;  // already sorted by construction
}

// Random task over a random base: free pairs drawn from its non-edges.
EnumerationTask random_task(std::mt19937& rng, int n, double p, int want_pairs,
                            std::vector<SimpleGraph> filters) {
    EnumerationTask t;
    t.base = testutil::random_graph(rng, n, p);
    std::vector<std::pair<int, int>> nonedges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!t.base.has_edge(u, v)) nonedges.push_back({u, v});
    std::shuffle(nonedges.begin(), nonedges.end(), rng);
    int k = std::min<int>(want_pairs, static_cast<int>(nonedges.size()));
    t.free_pairs.assign(nonedges.begin(), nonedges.begin() + k);
    t.filters = std::move(filters);
    return t;
}

}  // namespace

TEST_CASE("engine matches the naive filtered enumeration on random tasks") {
    std::mt19937 rng(20260816);
    int nonempty = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<SimpleGraph> filters;
        switch (trial % 4) {
            case 0: filters = {};  // engine default trio
                break;
            case 1: filters = {make_claw()}; break;
            case 2: filters = {make_gamma(3)}; break;
            case 3: filters = {make_claw(), make_wheel(4)}; break;
        }
        EnumerationTask t = random_task(rng, 6 + trial % 4, 0.35, 10, filters);
        if (t.free_pairs.empty()) continue;
        auto expect = naive_survivors(t);
        auto rep = enumerate_free_extensions(t);
        REQUIRE(engine_sets(rep) == expect);
        CHECK(rep.class_count == static_cast<long long>(expect.size()));
        CHECK(rep.labeled_count == rep.class_count);
        if (!expect.empty()) ++nonempty;
    }
    // the sweep must exercise both dead and live tasks
    CHECK(nonempty > 5);
}

TEST_CASE("engine matches the oracle on structured bases") {
    // the split-path base with only w1's pairs against the open path edge
    EnumerationTask t = case22_task('b');
    EnumerationTask small;
    small.base = t.base;
    small.free_pairs = {t.free_pairs[0], t.free_pairs[1]};  // w1 against p1, p2
    auto expect = naive_survivors(small);
    auto rep = enumerate_free_extensions(small);
    CHECK(engine_sets(rep) == expect);
    CHECK(expect.empty());  // w1 cannot dodge every claw with two pairs open

    // the follow-up base with the forced edge dropped: thirteen open pairs
    EnumerationTask follow = case22_followup_task(false);
    REQUIRE(follow.free_pairs.size() == 13);
    auto fexpect = naive_survivors(follow);
    auto frep = enumerate_free_extensions(follow);
    CHECK(engine_sets(frep) == fexpect);
    // the all-non-edge completion leaves v isolated, which no filter hits
    CHECK(std::find(fexpect.begin(), fexpect.end(), std::vector<int>{}) != fexpect.end());
}

TEST_CASE("a base with a decided forbidden embedding dies at the root") {
    SimpleGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);  // claw on 0,1,2,3
    EnumerationTask t;
    t.base = g;
    t.free_pairs = {{4, 5}, {1, 4}};
    auto rep = enumerate_free_extensions(t);
    CHECK(rep.class_count == 0);
    CHECK(rep.nodes_explored == 0);
    REQUIRE(!rep.witness_samples.empty());
    CHECK(rep.witness_samples[0].filter_index == 0);  // the claw filter
    std::set<int> verts(rep.witness_samples[0].vertices.begin(),
                        rep.witness_samples[0].vertices.end());
    CHECK(verts == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("a free base with no open pairs has exactly the empty completion") {
    SimpleGraph g = make_path_graph(4);
    EnumerationTask t;
    t.base = g;
    auto rep = enumerate_free_extensions(t);
    CHECK(rep.class_count == 1);
    CHECK(rep.survivors[0].added_edges.empty());
    CHECK(rep.labeled_count == 1);
}

TEST_CASE("propagation validation audits every forced pair") {
    EnumerationTask t = case22_task('b');
    // keep the eight pairs of the four w against the open path edge; every
    // other restriction leaves a decided claw at x and dies at the root
    t.free_pairs.resize(8);
    for (auto [u, v] : t.free_pairs) {
        std::string a = t.base.label_of(u), b = t.base.label_of(v);
        if (a > b) std::swap(a, b);
        REQUIRE((a == "p1" || a == "p2"));
        REQUIRE(b[0] == 'w');
    }
    t.symmetry.clear();
    t.validate_propagation = true;
    auto expect = naive_survivors(t);
    auto rep = enumerate_free_extensions(t);  // flip audit throws on any bogus forcing
    CHECK(engine_sets(rep) == expect);
    CHECK(!rep.forced_samples.empty());
    for (const auto& fn : rep.forced_samples) {
        CHECK(fn.pair_index >= 0);
        CHECK(fn.center >= 0);
        CHECK(fn.other_leaf >= 0);
    }
}

TEST_CASE("symmetry reduction loses nothing and expands back exactly") {
    EnumerationTask t = case1_task();
    REQUIRE(t.free_pairs.size() == 20);
    REQUIRE(t.symmetry.size() == 4);  // rim reflection and far-pair swap

    EnumerationTask plain = t;
    plain.symmetry.clear();
    auto full = enumerate_free_extensions(plain);
    auto reduced = enumerate_free_extensions(t);

    CHECK(reduced.labeled_count == full.class_count);
    CHECK(reduced.class_count <= full.class_count);

    // expand each class through the group and compare assignments as sets
    std::set<std::vector<int>> expanded;
    int n = t.base.n;
    std::vector<std::vector<int>> sigma;
    for (const auto& g : t.symmetry) {
        std::vector<int> sg(t.free_pairs.size());
        for (size_t i = 0; i < t.free_pairs.size(); ++i) {
            auto [u, v] = t.free_pairs[i];
            int a = g[u], b = g[v];
            if (a > b) std::swap(a, b);
            for (size_t j = 0; j < t.free_pairs.size(); ++j)
                if (t.free_pairs[j] == std::make_pair(a, b)) sg[i] = static_cast<int>(j);
        }
        sigma.push_back(sg);
    }
    (void)n;
    for (const auto& s : reduced.survivors) {
        std::vector<uint8_t> b(t.free_pairs.size(), 0);
        for (int i : s.pair_indices) b[i] = 1;
        for (const auto& sg : sigma) {
            std::vector<int> image;
            for (size_t j = 0; j < b.size(); ++j)
                if (b[sg[j]]) image.push_back(static_cast<int>(j));
            std::sort(image.begin(), image.end());
            expanded.insert(image);
        }
    }
    std::set<std::vector<int>> fullset;
    for (const auto& s : full.survivors) fullset.insert(s.pair_indices);
    CHECK(expanded == fullset);
}

TEST_CASE("reports are identical whatever the worker count") {
    EnumerationTask t = case22_followup_task(false);
    t.prefix_depth = 6;
    auto one = enumerate_free_extensions(t);
    t.jobs = 3;
    auto three = enumerate_free_extensions(t);
    CHECK(engine_sets(one) == engine_sets(three));
    CHECK(one.nodes_explored == three.nodes_explored);
    CHECK(one.class_count == three.class_count);
    CHECK(one.labeled_count == three.labeled_count);
    REQUIRE(one.witness_samples.size() == three.witness_samples.size());
    for (size_t i = 0; i < one.witness_samples.size(); ++i) {
        CHECK(one.witness_samples[i].filter_index == three.witness_samples[i].filter_index);
        CHECK(one.witness_samples[i].vertices == three.witness_samples[i].vertices);
    }
}

TEST_CASE("budget failure checkpoints and the resumed run completes exactly") {
    std::string path = "enumerate_ckpt_test.json";
    std::remove(path.c_str());

    EnumerationTask t = case22_followup_task(false);
    t.prefix_depth = 6;
    auto fresh = enumerate_free_extensions(t);
    REQUIRE(fresh.nodes_explored > 50);

    t.checkpoint_path = path;
    t.node_budget = fresh.nodes_explored / 3;
    bool hit_budget = false;
    try {
        enumerate_free_extensions(t);
    } catch (const Error& e) {
        hit_budget = true;
        CHECK(e.kind == Error::Kind::Budget);
        CHECK(std::string(e.what()).find(path) != std::string::npos);
    }
    REQUIRE(hit_budget);

    t.node_budget = -1;
    t.resume = true;
    auto resumed = enumerate_free_extensions(t);
    CHECK(engine_sets(resumed) == engine_sets(fresh));
    CHECK(resumed.class_count == fresh.class_count);
    CHECK(resumed.nodes_explored == fresh.nodes_explored);

    // a foreign checkpoint is refused rather than silently reused
    EnumerationTask other = case22_followup_task(true);
    other.checkpoint_path = path;
    other.resume = true;
    CHECK_THROWS_AS(enumerate_free_extensions(other), Error);
    std::remove(path.c_str());
}

TEST_CASE("role symmetry groups have the expected sizes") {
    EnumerationTask c1 = case1_task();
    CHECK(c1.symmetry.size() == 4);
    EnumerationTask c22 = case22_task('b');
    CHECK(c22.symmetry.size() == 32);
    for (const auto& g : c22.symmetry) {
        // roles survive: x stays put, w goes to w
        CHECK(g[c22.base.vertex_named("x")] == c22.base.vertex_named("x"));
        std::string img = c22.base.label_of(g[c22.base.vertex_named("w1")]);
        CHECK(img[0] == 'w');
    }
}

TEST_CASE("tail table and attachment instances have the agreed shape") {
    auto table = tail_table();
    REQUIRE(table.size() == 9);
    int singles = 0, doubles = 0;
    for (const auto& combo : table) {
        REQUIRE(!combo.tails.empty());
        REQUIRE(combo.tails.size() <= 2);
        int plainsum = 0;
        for (const auto& tl : combo.tails) plainsum += tl.len - (tl.dc ? 1 : 0);
        if (combo.tails.size() == 1) {
            ++singles;
            CHECK(plainsum == 3);
        } else {
            ++doubles;
            CHECK(plainsum == 2);
        }
    }
    CHECK(singles == 2);
    CHECK(doubles == 7);

    for (int fi : {1, 2, 5, 7}) {
        SimpleGraph f = make_F(fi);
        auto m = completed_set(fi);
        std::set<int> mset(m.begin(), m.end());
        uint64_t nmask = 0;
        for (int v : m) nmask |= f.neighbors(v);
        for (int v : m) nmask &= ~(1ull << v);
        auto insts = tails_instances(fi);
        CHECK(!insts.empty());
        std::set<std::string> seen;
        for (const auto& inst : insts) {
            REQUIRE(inst.attach.size() == inst.combo.tails.size());
            for (size_t k = 0; k < inst.attach.size(); ++k) {
                int site = inst.attach[k];
                if (inst.combo.tails[k].dc)
                    CHECK(mset.count(site));
                else
                    CHECK(((nmask >> site) & 1) == 1);
            }
            if (inst.combo.tails.size() == 2) {
                const Tail &a = inst.combo.tails[0], &b = inst.combo.tails[1];
                if (a.len == b.len && a.dc == b.dc) CHECK(inst.attach[0] <= inst.attach[1]);
            }
            std::string key;
            for (const auto& tl : inst.combo.tails)
                key += std::to_string(tl.len) + (tl.dc ? "d" : "p");
            for (int s : inst.attach) key += "@" + std::to_string(s);
            CHECK(seen.insert(key).second);  // no instance listed twice
        }
    }
}

TEST_CASE("tails tasks open exactly the host pairs of the new vertices") {
    TailCombo single{{Tail{3, false}}};
    SimpleGraph f1 = make_F(1);
    auto m = completed_set(1);
    uint64_t nmask = 0;
    for (int v : m) nmask |= f1.neighbors(v);
    for (int v : m) nmask &= ~(1ull << v);
    int site = vertices_from_mask(nmask)[0];
    EnumerationTask t = tails_task(1, single, {site});
    CHECK(t.base.n == 17);  // 12 host vertices, triangle plus two path steps
    // 5 new vertices against the 6 hosts outside the completed set and off
    // the identified end
    CHECK(t.free_pairs.size() == 30);
    auto m1 = completed_set(1);
    for (auto [u, v] : t.free_pairs) {
        CHECK(v >= 12);
        CHECK(u < 12);
        CHECK(u != site);
        CHECK(std::find(m1.begin(), m1.end(), u) == m1.end());
    }

    TailCombo twin{{Tail{0, false}, Tail{2, false}}};
    auto sites = vertices_from_mask(nmask);
    REQUIRE(sites.size() >= 2);
    EnumerationTask t2 = tails_task(1, twin, {sites[0], sites[1]});
    CHECK(t2.base.n == 18);
    // 2 + 4 new vertices against 12 - 5 - 2 admissible hosts each
    CHECK(t2.free_pairs.size() == 30);

    // a dc tail keeps its last vertex's pairs open, completed set included
    TailCombo dcs{{Tail{4, true}}};
    EnumerationTask t3 = tails_task(1, dcs, {m1[0]});
    // five outer vertices times 7 hosts, last vertex against all but its site
    CHECK(t3.free_pairs.size() == 5 * 7 + 11);
    bool last_touches_m = false;
    for (auto [u, v] : t3.free_pairs)
        if (v == t3.base.n - 1 && std::find(m1.begin(), m1.end(), u) != m1.end())
            last_touches_m = true;
    CHECK(last_touches_m);
}

TEST_CASE("dropping the bowtie-chain filter lets tail completions survive") {
    // with only the claw and 5-wheel forbidden the very first instance
    // already admits completions, so that filter carries the contradiction
    auto insts = tails_instances(1);
    bool found = false;
    for (size_t i = 0; i < insts.size() && !found; ++i) {
        EnumerationTask t = tails_task(1, insts[i].combo, insts[i].attach);
        t.filters = {make_claw(), make_wheel(5)};
        t.filter_names = {"claw", "W5"};
        t.node_budget = 4000000;
        EnumerationReport rep;
        try {
            rep = enumerate_free_extensions(t);
        } catch (const Error& e) {
            REQUIRE(e.kind == Error::Kind::Budget);
            continue;
        }
        if (rep.class_count > 0) found = true;
    }
    CHECK(found);
}
