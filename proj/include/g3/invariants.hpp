#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g3/graph.hpp"

namespace g3 {

// Minimum number of vertices whose removal disconnects the graph (or leaves
// fewer than 2 vertices); kappa(K_n) = n - 1 by convention.  Exact, via
// vertex-split max-flow over nonadjacent pairs.
int vertex_connectivity(const SimpleGraph& g);

// Exact independence number by branch and bound with a greedy clique-cover
// bound.  `bound` caps the search: an instance that is not decided within it
// raises a Budget error rather than returning a possibly wrong answer.
int independence_number(const SimpleGraph& g, int bound = 40);

// Optional vertex coloring for canonical forms and isomorphism: colors[v] is
// an arbitrary small integer class; maps must preserve classes.
using VertexColoring = std::vector<int>;

// Canonical form: a string equal for two (colored) graphs iff they are
// isomorphic (by color-preserving maps).  Computed by iterated degree
// refinement plus individualization; the string is the graph6 encoding of the
// canonically relabeled graph, with a color signature appended when colors
// are present.
std::string canonical_form(const SimpleGraph& g, const VertexColoring* colors = nullptr);

// A relabeling that realizes the canonical form: canonical vertex i is
// original vertex perm[i].
std::vector<int> canonical_order(const SimpleGraph& g, const VertexColoring* colors = nullptr);

// Isomorphism g -> h; the embedding maps vertices of g onto vertices of h.
std::optional<Embedding> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                                          const VertexColoring* gcolors = nullptr,
                                          const VertexColoring* hcolors = nullptr);
bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h);

// All automorphisms (as images: perm[v] = image of v).  Intended for small
// graphs (pattern bases); the full group is materialized.
std::vector<std::vector<int>> automorphisms(const SimpleGraph& g,
                                            const VertexColoring* colors = nullptr);

// Multigraph isomorphism via the colored incidence encoding: vertices as one
// color class, one node per edge in a second class.  Parallel edges become
// distinct edge nodes, so multiplicities are respected.
bool are_isomorphic(const Multigraph& g, const Multigraph& h);
std::string canonical_form(const Multigraph& g);

}  // namespace g3
