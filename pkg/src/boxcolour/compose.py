"""Build an acyclic edge colouring of a cartesian product from acyclic
colourings of the two factors.

The factor with the larger palette (size eta) keeps its colours, shifted:
inside the copy sitting at vertex v of the other factor, every one of its
edge colours is rotated by the vertex colour of v, modulo eta.  Distinct
rotations never agree anywhere, which is what kills cycles that cross
copies.  The smaller factor's edges become perfect matchings between
copies and keep their own colours, drawn from a disjoint (primed) family.

The one true exception: a product of two single edges is a four-cycle,
which no 2-colouring handles acyclically; that case is a dedicated error
and `compose_or_solve` falls back to the exact solver for it.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

from .colouring import (
    ColourPalette,
    EdgeColouring,
    VertexColouring,
    check_acyclic,
    check_proper_vertex,
    primed,
    unprimed,
)
from .graphs import (
    GEdge,
    Graph,
    cartesian_product,
    hypercube,
    is_connected,
)
from .solver import SearchBudget, exact_aci
from .vertex_colouring import brooks_bound, brooks_colouring


@dataclass(frozen=True)
class ShiftPermutation:
    """Rotation j -> (j + shift) mod modulus on colour indices.

    Two rotations with different shifts disagree at every index, so a
    family of them indexed by vertex colours is mutually non-fixing.
    """

    shift: int
    modulus: int

    def __post_init__(self):
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")
        if not 0 <= self.shift < self.modulus:
            raise ValueError(f"shift {self.shift} outside 0..{self.modulus - 1}")

    def __call__(self, index: int) -> int:
        if not 0 <= index < self.modulus:
            raise ValueError(f"colour index {index} outside 0..{self.modulus - 1}")
        return (index + self.shift) % self.modulus


def cyclic_shift(shift: int, index: int, modulus: int) -> int:
    return ShiftPermutation(shift, modulus)(index)


class C4ProductError(ValueError):
    """Both factors are single edges: their product is the four-cycle,
    whose acyclic chromatic index is 3, not 1+1.  Solve it exactly
    instead (see compose_or_solve)."""


@dataclass(frozen=True)
class ComposeInput:
    g: Graph
    g_colouring: EdgeColouring
    h: Graph
    h_colouring: EdgeColouring
    h_vertex_colouring: Optional[VertexColouring] = None


def _validate_factor(name: str, graph: Graph, colouring: EdgeColouring) -> None:
    if graph.n < 2:
        raise ValueError(f"factor {name} must have at least two vertices")
    if not is_connected(graph):
        raise ValueError(f"factor {name} must be connected")
    if colouring.graph != graph:
        raise ValueError(f"colouring of factor {name} belongs to a different graph")
    bad = check_acyclic(colouring)
    if bad is not None:
        raise ValueError(f"colouring of factor {name} is not acyclic: {bad}")


def compose(inp: ComposeInput) -> tuple[Graph, EdgeColouring]:
    """Colour g x h with at most (palette of g) + (palette of h) colours.

    The output graph is always the product in caller order, whichever
    factor ends up supplying the shifted family.
    """
    _validate_factor("g", inp.g, inp.g_colouring)
    _validate_factor("h", inp.h, inp.h_colouring)

    eta = inp.g_colouring.palette.size
    beta = inp.h_colouring.palette.size
    if eta == 1 and beta == 1:
        raise C4ProductError(
            "both factors are coloured with one colour (single edges); "
            "their product is a 4-cycle and needs 3 colours"
        )

    # orientation: the larger palette plays the shifted role
    swapped = eta < beta
    if swapped:
        if inp.h_vertex_colouring is not None:
            raise ValueError(
                "supplied vertex colouring is for the factor with the larger "
                "palette; swap the factors or omit it"
            )
        shift_graph, shift_x = inp.h, inp.h_colouring
        match_graph, match_x = inp.g, inp.g_colouring
        eta, beta = beta, eta
    else:
        shift_graph, shift_x = inp.g, inp.g_colouring
        match_graph, match_x = inp.h, inp.h_colouring

    if inp.h_vertex_colouring is not None:
        y = inp.h_vertex_colouring
        if y.graph != match_graph:
            raise ValueError("vertex colouring belongs to a different graph")
        if check_proper_vertex(y) is not None:
            raise ValueError("supplied vertex colouring is not proper")
        d = max(y.colours) + 1
    else:
        y = brooks_colouring(match_graph)
        d = brooks_bound(match_graph)

    # For verified acyclic inputs eta >= d always holds (the matching factor
    # needs at least max-degree colours, and complete graphs and odd cycles
    # cannot be done with max-degree alone), but a padded modulus keeps the
    # rotations total if that ever changes.
    if eta < d:
        warnings.warn(
            f"shift palette padded from {eta} to {d} colours to cover all rotations",
            stacklevel=2,
        )
        eta = d

    shift_rank = shift_x.palette.rank
    match_rank = match_x.palette.rank
    rotations = [ShiftPermutation(y.colours[v], eta) for v in range(match_graph.n)]

    product, kinds = cartesian_product(inp.g, inp.h)
    colours = []
    for kind in kinds:
        if isinstance(kind, GEdge):
            if swapped:
                # caller's g is the matching factor: same primed colour in
                # every copy
                colours.append(primed(match_rank(inp.g_colouring.colour_of(*kind.g_edge))))
            else:
                rot = rotations[kind.h_vertex]
                colours.append(unprimed(rot(shift_rank(inp.g_colouring.colour_of(*kind.g_edge)))))
        else:
            if swapped:
                rot = rotations[kind.g_vertex]
                colours.append(unprimed(rot(shift_rank(inp.h_colouring.colour_of(*kind.h_edge)))))
            else:
                colours.append(primed(match_rank(inp.h_colouring.colour_of(*kind.h_edge))))

    result = EdgeColouring(product, colours, ColourPalette(eta, beta))
    bad = check_acyclic(result)
    if bad is not None:
        raise RuntimeError(f"composed colouring failed verification: {bad}")
    if len(set(colours)) > eta + beta:
        raise RuntimeError("composed colouring exceeded its palette bound")
    return product, result


def compose_or_solve(
    inp: ComposeInput, budget: Optional[SearchBudget] = None
) -> tuple[Graph, EdgeColouring]:
    """compose, except the single-edge-by-single-edge case is solved
    exactly (it is a 4-cycle; the solver returns its 3-colouring)."""
    try:
        return compose(inp)
    except C4ProductError:
        product, _ = cartesian_product(inp.g, inp.h)
        result = exact_aci(product, budget)
        if result.witness is None:
            raise RuntimeError("exact solve of the 4-cycle fallback ran out of budget")
        return product, result.witness


def compose_many(factors: list[tuple[Graph, EdgeColouring]]) -> tuple[Graph, EdgeColouring]:
    """Left fold of compose over two or more coloured factors."""
    if len(factors) < 2:
        raise ValueError("need at least two factors")
    graph, colouring = factors[0]
    for next_graph, next_colouring in factors[1:]:
        graph, colouring = compose_or_solve(
            ComposeInput(graph, colouring, next_graph, next_colouring)
        )
    return graph, colouring


def hypercube_colouring(d: int) -> tuple[Graph, EdgeColouring]:
    """Acyclic colouring of the d-cube: 1 colour for a single edge,
    exactly d+1 colours for d >= 2, built by folding single edges onto
    the exactly-solved four-cycle."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    cube = hypercube(d)
    if d == 1:
        return cube, EdgeColouring.single_family(cube, [0], 1)
    k2 = Graph(2, [(0, 1)])
    one = EdgeColouring.single_family(k2, [0], 1)
    _, colouring = compose_many([(k2, one)] * d)
    # rebuild onto the generator's graph: identical vertices and edges,
    # nicer labels
    return cube, EdgeColouring(cube, colouring.colours, colouring.palette)
