#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "g3/graph.hpp"

namespace g3 {

// Node allowance per path search; exceeding it raises a Budget error rather
// than hanging silently.
inline constexpr long long DEFAULT_HAM_BUDGET = 100'000'000;

// Exact search for a Hamiltonian path from u to v.  Returns the vertex
// sequence or nullopt.  u must differ from v.
std::optional<std::vector<int>> has_ham_path(const SimpleGraph& g, int u, int v,
                                             long long node_budget = DEFAULT_HAM_BUDGET);

// Outcome of the all-pairs check.  When `connected` is false, `failing_pair`
// is the lexicographically least pair with no Hamiltonian path between its
// ends; `witness_paths` holds a path for every pair verified before the
// failure (all pairs, if none failed).
struct HamVerdict {
    bool connected = false;
    std::optional<std::pair<int, int>> failing_pair;
    std::map<std::pair<int, int>, std::vector<int>> witness_paths;
};

HamVerdict is_hamilton_connected(const SimpleGraph& g,
                                 long long per_pair_budget = DEFAULT_HAM_BUDGET);

bool is_hamiltonian(const SimpleGraph& g, long long node_budget = DEFAULT_HAM_BUDGET);

}  // namespace g3
