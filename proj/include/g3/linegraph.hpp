#pragma once

#include <optional>

#include "g3/detect.hpp"
#include "g3/graph.hpp"

namespace g3 {

// Line graph of a multigraph: vertex i stands for h.edges[i], two vertices
// are adjacent iff the edges share an endpoint.  Parallel edges share both
// endpoints, so every pair of copies is adjacent.
SimpleGraph line_graph(const Multigraph& h);

// Contract edge h.edges[edge_index] into a single vertex.  Every copy of that
// endpoint pair, the contracted edge included, turns into a loop and each loop
// is replaced by a pendant edge at the merged vertex, so the edge count (and
// the indexing of surviving edges) is preserved.  With that convention
// L(contract_to_pendant(h, i)) equals the local completion of L(h) at i.
Multigraph contract_to_pendant(const Multigraph& h, int edge_index);

// Bermond-Meyer test: g is the line graph of some multigraph iff it has no
// induced copy of the seven minimal obstructions.  On failure the report
// carries the obstruction index (0-based) and a violating embedding.
FreenessReport is_line_graph_of_multigraph(const SimpleGraph& g);

constexpr long long DEFAULT_PREIMAGE_BUDGET = 10'000'000;

// A multigraph h with line_graph(h) == g, normalized so that a vertex of g is
// simplicial iff its edge in h is pendant.  Among all preimages this one is
// unique up to isomorphism; it is found by backtracking over assignments of
// each g-vertex to a pair of h-endpoints.  Returns nullopt when g is not a
// line graph of a multigraph.  g must be connected.
std::optional<Multigraph> preimage(const SimpleGraph& g,
                                   long long node_budget = DEFAULT_PREIMAGE_BUDGET);

// True when h has no edge set R with |R| <= k-1 whose removal leaves at least
// two components that each contain an edge.  Checked by enumerating all edge
// subsets of size at most k-1.
bool is_essentially_k_edge_connected(const Multigraph& h, int k);

}  // namespace g3
