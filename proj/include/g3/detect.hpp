#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "g3/graph.hpp"

namespace g3 {

// Backtracking search for an induced copy of `pattern` in `host`.  `anchor`
// pre-assigns pattern vertices to host vertices as (pattern, host) pairs; the
// returned embedding extends it.  Pattern vertices are processed in descending
// degree order and host candidates ascending, so the result is deterministic.
// Throws when the anchor repeats a pattern vertex or a host vertex.
std::optional<Embedding> find_induced(const SimpleGraph& host, const SimpleGraph& pattern,
                                      const std::vector<std::pair<int, int>>& anchor = {});

// Outcome of a forbidden-subgraph scan: free, or the first pattern that
// occurs with the embedding that proves it.
struct FreenessReport {
    bool free = true;
    int pattern_index = -1;
    Embedding witness;
};

FreenessReport is_free(const SimpleGraph& host, const std::vector<SimpleGraph>& patterns);

// One of five local configurations inside N(x), searched in clause order:
//   1: three pairwise nonadjacent vertices,
//   2: four vertices inducing a 4-cycle,
//   3: five vertices carrying a 5-cycle of non-edges,
//   4: five vertices with non-edges x1x2,x2x3,x3x4,x4x5 and edges x1x4,x2x5,
//   5: five vertices with non-edges x2x3,x3x4,x1x5 and edges x2x5,x5x3,x3x1,x1x4.
// Finding any of them forces an induced claw, 4-wheel or 5-wheel centered at x.
struct EndgameWitness {
    int kind = 0;               // clause number, 1..5
    std::vector<int> vertices;  // x1..xk, all neighbors of x
};

std::optional<EndgameWitness> find_endgame(const SimpleGraph& g, int x);

// Exact test whether N(x) is the union of two cliques; equivalent to
// 2-colorability of the complement of the induced neighborhood.
std::optional<std::pair<std::vector<int>, std::vector<int>>> two_clique_cover(
    const SimpleGraph& g, int x);

bool neighborhood_has_induced_C5(const SimpleGraph& g, int x);

}  // namespace g3
