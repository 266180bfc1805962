#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "g3/graph.hpp"

namespace g3 {

// An edge-subset search instance: `base` is fixed, every pair in `free_pairs`
// may independently become an edge or a non-edge, and a completion survives
// when it contains no induced copy of any filter pattern.  Pairs not listed
// free are decided by `base` (its edges and its remaining non-edges).
struct EnumerationTask {
    SimpleGraph base;
    std::vector<std::pair<int, int>> free_pairs;

    // Forbidden patterns; empty selects {claw, Gamma_3, W_5}.
    std::vector<SimpleGraph> filters;
    std::vector<std::string> filter_names;

    // Automorphisms of `base` (images, as in automorphisms()) that map the
    // free-pair set onto itself.  When nonempty, survivors are reported one
    // per orbit (the lexicographically least assignment of each class).
    std::vector<std::vector<int>> symmetry;

    long long node_budget = -1;  // decision nodes; < 0 means unlimited
    int jobs = 1;
    int prefix_depth = 8;  // work-unit granularity, clamped to |free_pairs|

    // When set, finished work units are recorded here; a later run with
    // `resume` skips them.  A budget failure leaves the file behind.
    std::string checkpoint_path;
    bool resume = false;

    // Re-check every propagation-forced pair by flipping it and demanding a
    // decided forbidden embedding.  Slow; meant for the test suite.
    bool validate_propagation = false;
};

// One surviving completion (or, under symmetry, one class of them).
struct Survivor {
    std::vector<int> pair_indices;  // free-pair indices decided as edges
    std::vector<std::pair<int, int>> added_edges;
    std::string canonical;    // canonical form of the completed graph
    long long orbit_size = 1; // labeled completions this class stands for
};

// A decided forbidden embedding met during the search (capped sample).
struct WitnessNote {
    int filter_index = -1;
    std::vector<int> vertices;
};

// A propagation event (capped sample): pair_index was forced to be an edge
// because deciding it as a non-edge completes the claw
// {center; other_leaf, u, v} where (u, v) is the forced pair.
struct ForcedNote {
    int pair_index = -1;
    int center = -1;
    int other_leaf = -1;
};

struct EnumerationReport {
    std::vector<Survivor> survivors;  // sorted by pair_indices
    long long labeled_count = 0;      // survivors before symmetry reduction
    long long class_count = 0;        // survivors modulo the symmetry group
    long long nodes_explored = 0;
    double wall_seconds = 0.0;
    std::vector<WitnessNote> witness_samples;
    std::vector<ForcedNote> forced_samples;
};

// Depth-first three-valued search over all 2^|free_pairs| completions with
// decided-embedding pruning and claw unit propagation.  Exhaustive: the
// survivor list equals the naive filtered enumeration (modulo symmetry when
// supplied).  Deterministic for a fixed task, whatever `jobs` is.
EnumerationReport enumerate_free_extensions(const EnumerationTask& task);

// Automorphisms of `g` that preserve the first-letter class of every vertex
// label and map `pairs` onto itself.  Always contains the identity.
std::vector<std::vector<int>> role_symmetry(const SimpleGraph& g,
                                            const std::vector<std::pair<int, int>>& pairs);

// A tail is a triangle plus a pendant path of `len` edges; the free end of
// the path is identified with a host vertex.  A `dc` end sits directly on a
// completed-set vertex; a plain end sits on a neighbor of that set instead.
struct Tail {
    int len = 0;
    bool dc = false;
};

// One row of the attachment table: one or two tails added together.
struct TailCombo {
    std::vector<Tail> tails;
};

// The nine admissible rows: singles (3, plain), (4, dc) and the seven pairs
// whose plain-equivalent path lengths sum to 2 (a dc tail counts one less).
std::vector<TailCombo> tail_table();

// The completed vertex set of F_i used by the tail campaign: {x, w1..w4}
// except {x, w2, w3} for i = 2 and {x, w1, w4} for i = 5.
std::vector<int> completed_set(int fi);

// Task builders for the campaigns; tests reuse them with altered filters.
EnumerationTask case1_task();
EnumerationTask case22_task(char variant);  // 'a' or 'b'

// The unique completed survivor of the variant-b task (throws NotFound if
// the enumeration does not produce exactly one class).
SimpleGraph case22_survivor();

// The survivor extended by one vertex v; with `forced_edge`, v p3 is a base
// edge and the free pairs are v against everything else, otherwise all of
// v's pairs are free.
EnumerationTask case22_followup_task(bool forced_edge = true);

// Every (combo, attachment sites) instance for F_i: dc ends range over
// completed_set(fi), plain ends over its neighborhood; two equal tails are
// attached unordered.  attach[k] is the site of combo.tails[k].
struct TailsInstance {
    TailCombo combo;
    std::vector<int> attach;
};
std::vector<TailsInstance> tails_instances(int fi);

// Base = F_i plus the drawn tails.  Open pairs are tail vertex against host
// vertex, except that a tail vertex may touch neither the completed set nor
// an identified end (both decided non-edges, see the builder); the one tail
// vertex already inside the completed set's closed neighborhood, the last
// vertex of a dc tail, keeps all its host pairs open.
EnumerationTask tails_task(int fi, const TailCombo& combo, const std::vector<int>& attach);

struct CampaignOptions {
    long long node_budget = -1;
    int jobs = 1;
    std::string checkpoint_path;
    bool resume = false;
};

// A campaign bundles tasks with the assertions on their outcomes; `pass`
// reports the assertion, `detail` explains it either way.
struct CampaignResult {
    bool pass = false;
    std::string detail;
    EnumerationReport report;  // single-task campaigns: the task's report;
                               // tails: survivors/nodes merged over instances
    std::vector<std::pair<int, int>> mapping;  // case1: survivor index -> F_i
    long long tasks_run = 0;
};

// 4-wheel base with the twenty admissible w-to-path pairs free; asserts ten
// survivor classes matching the published added-edge lists of F_1..F_10 up
// to the base symmetry, and emits the class -> i mapping.
CampaignResult campaign_w4_case1(const CampaignOptions& opt = {});

// Disjoint 4-wheel against the two split-path bases (32 free pairs); asserts
// no survivor for variant 'a' and exactly one class for variant 'b'.
CampaignResult campaign_w4_case22(char variant, const CampaignOptions& opt = {});

// The variant-b survivor with a forced extra neighbor of p3; asserts no
// survivor.
CampaignResult campaign_w4_case22_followup(const CampaignOptions& opt = {});

// All tail combos and attachments on F_i; asserts no survivor anywhere.
// Finished instances are checkpointed one by one when a path is given.
CampaignResult campaign_tails(int fi, const CampaignOptions& opt = {});

}  // namespace g3
