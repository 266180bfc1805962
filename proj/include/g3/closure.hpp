#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g3/graph.hpp"
#include "g3/hamilton.hpp"

namespace g3 {

// G*_x: adds every missing edge between two neighbors of x.
SimpleGraph local_completion(const SimpleGraph& g, int x);

// G*_M: completion at every vertex of m in sequence.  The outcome does not
// depend on the order, so m is processed ascending.
SimpleGraph local_completion_set(const SimpleGraph& g, const std::vector<int>& m);

struct VertexClass {
    bool simplicial = false;
    // Induced neighborhood connected and noncomplete.
    bool eligible = false;
    // Connectivity of the induced neighborhood, capped at 3.
    int local_connectivity = 0;
};
VertexClass classify_vertex(const SimpleGraph& g, int x);

// Sufficient test for local 2-connectivity: some induced subgraph of the
// neighborhood of x is 2-connected and carries two disjoint nonadjacent
// pairs.  Exhaustive over neighborhood subsets, so deg(x) is capped.
bool lemma_two_indep_sets(const SimpleGraph& g, int x);

uint64_t graph_hash(const SimpleGraph& g);

struct ClosureStep {
    // Completed vertex set; empty for a "declared" step.
    std::vector<int> vertices;
    // One of: eligible, locally-2-connected, feasible, simplicial, declared.
    std::string justification;
    // Hash of the graph after this step.
    uint64_t graph_hash = 0;
};

struct ClosureTrace {
    uint64_t initial_hash = 0;
    uint64_t final_hash = 0;
    std::vector<ClosureStep> steps;
};

// Applies a recorded trace: completes each step's vertex set, or jumps to the
// complete graph for a "declared" step.  Used to audit traces.
SimpleGraph replay_trace(const SimpleGraph& initial, const ClosureTrace& trace);

// Iterated local completion at eligible vertices (lowest index first) until
// none remains.  The result is independent of the choice order.  Input must
// be claw-free.
std::pair<SimpleGraph, ClosureTrace> ryjacek_closure(const SimpleGraph& g);

struct Feasibility {
    bool feasible = false;
    // Set when x was simplicial; feasible is then false by definition, since
    // feasibility is only defined over nonsimplicial vertices.
    bool simplicial = false;
};

// x is feasible when completing at it leaves the graph non-Hamilton-connected.
// Undefined (error) on Hamilton-connected inputs.
Feasibility is_feasible(const SimpleGraph& g, int x,
                        long long node_budget = DEFAULT_HAM_BUDGET);

// An ordering x_1..x_k of m with every x_{i+1} feasible in the graph completed
// at x_1..x_i, or nullopt.  The weak variant lets x_2..x_k be simplicial at
// their turn instead (the first vertex must still be feasible).  Intermediate
// graphs depend only on the completed set, which the search memoizes.
std::optional<std::vector<int>> find_feasible_order(
    const SimpleGraph& g, const std::vector<int>& m,
    long long node_budget = DEFAULT_HAM_BUDGET);
std::optional<std::vector<int>> is_weakly_feasible(
    const SimpleGraph& g, const std::vector<int>& m,
    long long node_budget = DEFAULT_HAM_BUDGET);

struct Gamma3Options {
    // Largest candidate feasible set tried; factorial beyond this.
    int max_set_size = 5;
    // Per-pair node budget handed to the Hamiltonian oracle.
    long long node_budget = DEFAULT_HAM_BUDGET;
};

// The Gamma3 closure: on a Hamilton-connected input, the complete graph (one
// "declared" step); otherwise repeatedly completes the first feasible set
// (smallest, then lexicographic) whose completion stays Gamma3-free, until no
// such set of size <= max_set_size exists.  Input must be claw-free and
// Gamma3-free.  Every intermediate graph is Gamma3-free and not
// Hamilton-connected.
std::pair<SimpleGraph, ClosureTrace> gamma3_closure(const SimpleGraph& g,
                                                    const Gamma3Options& opt = {});

}  // namespace g3
