"""Claw-free graph closures, line graph preimages and exhaustive
edge-extension campaigns.

Graphs cross the boundary as graph6 strings; multigraphs as (n, edge list)
pairs where a repeated edge is a parallel copy.
"""

from ._core import (
    LibraryError,
    campaign,
    canonical,
    close,
    edges,
    feasible,
    from_edges,
    ham_path,
    hamilton_connected,
    hamiltonian,
    is_free,
    isomorphic,
    line_graph,
    local_completion,
    order,
    pattern,
    pattern_labels,
    pattern_names,
    preimage,
    selftest,
)

__version__ = "1.0.0"

__all__ = [
    "LibraryError",
    "campaign",
    "canonical",
    "close",
    "edges",
    "feasible",
    "from_edges",
    "ham_path",
    "hamilton_connected",
    "hamiltonian",
    "is_free",
    "isomorphic",
    "line_graph",
    "local_completion",
    "order",
    "pattern",
    "pattern_labels",
    "pattern_names",
    "preimage",
    "selftest",
]
