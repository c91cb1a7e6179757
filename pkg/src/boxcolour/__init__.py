"""Acyclic edge colouring of cartesian graph products.

An acyclic edge colouring is proper and leaves no cycle on just two
colours; the least number of colours needed is the acyclic chromatic
index.  This package composes acyclic colourings of two factors into one
of their cartesian product within the sum of the factor palettes, and
ships the exact solver, verifier, and generators needed to check that
claim on small graphs.
"""

from .colouring import (
    BichromaticCycle,
    ColourPalette,
    EdgeColouring,
    NotProper,
    VertexColouring,
    Violation,
    check_acyclic,
    check_proper_edge,
    check_proper_vertex,
    colours_used,
    find_bichromatic_cycle,
)
from .compose import (
    C4ProductError,
    ComposeInput,
    ShiftPermutation,
    compose,
    compose_many,
    compose_or_solve,
    cyclic_shift,
    hypercube_colouring,
)
from .graphs import (
    GEdge,
    Graph,
    GraphClass,
    HEdge,
    ProductEdgeKind,
    cartesian_product,
    classify,
    complete,
    cycle,
    grid,
    hypercube,
    is_connected,
    new_graph,
    path,
    product_coords,
    product_edge_endpoints,
    product_vertex,
)
from .solver import AciResult, SearchBudget, exact_aci, greedy_acyclic, lower_bound
from .vertex_colouring import brooks_bound, brooks_colouring

__all__ = [
    "AciResult",
    "BichromaticCycle",
    "C4ProductError",
    "ColourPalette",
    "ComposeInput",
    "EdgeColouring",
    "GEdge",
    "Graph",
    "GraphClass",
    "HEdge",
    "NotProper",
    "ProductEdgeKind",
    "SearchBudget",
    "ShiftPermutation",
    "VertexColouring",
    "Violation",
    "brooks_bound",
    "brooks_colouring",
    "cartesian_product",
    "check_acyclic",
    "check_proper_edge",
    "check_proper_vertex",
    "classify",
    "colours_used",
    "complete",
    "compose",
    "compose_many",
    "compose_or_solve",
    "cycle",
    "cyclic_shift",
    "exact_aci",
    "find_bichromatic_cycle",
    "greedy_acyclic",
    "grid",
    "hypercube",
    "hypercube_colouring",
    "is_connected",
    "lower_bound",
    "new_graph",
    "path",
    "product_coords",
    "product_edge_endpoints",
    "product_vertex",
]
