"""Edge and vertex colourings plus the independent verifier.

Colour identifiers are small integers carrying a primed-flag in the low
bit: colour j of the unprimed family is ``2*j``, colour j' of the primed
family is ``2*j + 1``.  A palette records how many colours each family
holds; its canonical order puts all unprimed colours before all primed
ones.  Single-family colourings simply use a palette with no primed part.

The verifier here is the trusted oracle for every other module: properness
is a per-vertex scan, acyclicity a union-find forest check per colour pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .graphs import Edge, Graph, _norm_edge


# ---------------------------------------------------------------------------
# Colour identifiers


def unprimed(index: int) -> int:
    return index << 1


def primed(index: int) -> int:
    return (index << 1) | 1


def is_primed(colour: int) -> bool:
    return bool(colour & 1)


def colour_index(colour: int) -> int:
    """Position of the colour within its own family."""
    return colour >> 1


def colour_order_key(colour: int) -> tuple[int, int]:
    """Sort key realizing the palette order: unprimed first, then primed."""
    return (colour & 1, colour >> 1)


def colour_label(colour: int) -> str:
    """Wire label: '3' for unprimed colour 3, \"3'\" for primed colour 3."""
    base = str(colour >> 1)
    return base + "'" if colour & 1 else base


def parse_colour_label(label: str) -> int:
    text = label.strip()
    flag = text.endswith("'")
    if flag:
        text = text[:-1]
    index = int(text)
    if index < 0:
        raise ValueError(f"negative colour index in label {label!r}")
    return primed(index) if flag else unprimed(index)


@dataclass(frozen=True)
class ColourPalette:
    """Ordered disjoint union of an unprimed and a primed colour family."""

    g_size: int
    h_size: int = 0

    def __post_init__(self):
        if self.g_size < 0 or self.h_size < 0:
            raise ValueError("palette sizes must be non-negative")

    @property
    def size(self) -> int:
        return self.g_size + self.h_size

    def __contains__(self, colour: int) -> bool:
        index = colour >> 1
        return index < (self.h_size if colour & 1 else self.g_size)

    def ordered(self) -> tuple[int, ...]:
        """All colour ids in canonical order."""
        return tuple(unprimed(j) for j in range(self.g_size)) + tuple(
            primed(j) for j in range(self.h_size)
        )

    def rank(self, colour: int) -> int:
        """Dense 0-based position of a colour in the canonical order."""
        if colour not in self:
            raise ValueError(f"colour {colour_label(colour)} outside palette {self}")
        index = colour >> 1
        return self.g_size + index if colour & 1 else index


# ---------------------------------------------------------------------------
# Colourings


class EdgeColouring:
    """Total assignment of palette colours to the edges of a graph.

    `colours[i]` is the colour of `graph.edges[i]`.
    """

    __slots__ = ("graph", "colours", "palette")

    def __init__(self, graph: Graph, colours: Iterable[int], palette: ColourPalette):
        colours = tuple(colours)
        if len(colours) != graph.m:
            raise ValueError(f"expected {graph.m} edge colours, got {len(colours)}")
        for c in colours:
            if c not in palette:
                raise ValueError(f"colour {colour_label(c)} outside palette {palette}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "colours", colours)
        object.__setattr__(self, "palette", palette)

    def __setattr__(self, name, value):
        raise AttributeError("EdgeColouring is immutable")

    @classmethod
    def single_family(cls, graph: Graph, indices: Iterable[int], k: int) -> "EdgeColouring":
        """Wrap dense colour indices 0..k-1 as an unprimed-only colouring."""
        return cls(graph, (unprimed(i) for i in indices), ColourPalette(k, 0))

    @classmethod
    def from_edge_map(
        cls, graph: Graph, mapping: Mapping[Edge, int], palette: ColourPalette
    ) -> "EdgeColouring":
        """Build from an edge -> colour map; a missing edge is an error."""
        colours = []
        for e in graph.edges:
            if e not in mapping:
                raise ValueError(f"partial colouring: edge {e} has no colour")
            colours.append(mapping[e])
        return cls(graph, colours, palette)

    def colour_of(self, u: int, v: int) -> int:
        return self.colours[self.graph.edge_index(u, v)]

    def distinct_colours(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.colours), key=colour_order_key))

    def to_json_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "palette": {"g": self.palette.g_size, "h": self.palette.h_size},
            "edges": [
                [u, v, colour_label(c)] for (u, v), c in zip(self.graph.edges, self.colours)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "EdgeColouring":
        palette = ColourPalette(int(data["palette"]["g"]), int(data["palette"]["h"]))
        rows = data["edges"]
        graph = Graph(int(data["n"]), [(int(u), int(v)) for u, v, _ in rows])
        mapping = {_norm_edge(int(u), int(v)): parse_colour_label(c) for u, v, c in rows}
        return cls.from_edge_map(graph, mapping, palette)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColouring):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.colours == other.colours
            and self.palette == other.palette
        )

    def __repr__(self) -> str:
        return f"EdgeColouring({self.graph!r}, {len(self.distinct_colours())} colours)"


def colours_used(x: EdgeColouring) -> int:
    """Number of distinct colours actually appearing on edges."""
    return len(set(x.colours))


class VertexColouring:
    """Total assignment of colour indices 0..d-1 to the vertices of a graph."""

    __slots__ = ("graph", "colours")

    def __init__(self, graph: Graph, colours: Iterable[int]):
        colours = tuple(colours)
        if len(colours) != graph.n:
            raise ValueError(f"expected {graph.n} vertex colours, got {len(colours)}")
        for c in colours:
            if c < 0:
                raise ValueError("vertex colour indices must be non-negative")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "colours", colours)

    def __setattr__(self, name, value):
        raise AttributeError("VertexColouring is immutable")

    def count(self) -> int:
        return len(set(self.colours))

    def __repr__(self) -> str:
        return f"VertexColouring({self.graph!r}, {self.count()} colours)"


# ---------------------------------------------------------------------------
# Violations


@dataclass(frozen=True)
class NotProper:
    """Two incident edges sharing a colour at `vertex`."""

    vertex: int
    edge1: Edge
    edge2: Edge

    def to_json_dict(self) -> dict:
        return {
            "kind": "not_proper",
            "vertex": self.vertex,
            "edges": [list(self.edge1), list(self.edge2)],
        }


@dataclass(frozen=True)
class BichromaticCycle:
    """A closed walk alternating exactly two colours.

    The vertex sequence is canonical: it starts at the smallest vertex and
    runs toward its smaller cycle neighbour; the closing edge back to the
    start is implicit.
    """

    colour_a: int
    colour_b: int
    cycle: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "kind": "bichromatic_cycle",
            "colours": [colour_label(self.colour_a), colour_label(self.colour_b)],
            "cycle": list(self.cycle),
        }


Violation = Union[NotProper, BichromaticCycle]


def canonical_cycle(vertices: Iterable[int]) -> tuple[int, ...]:
    """Rotate a closed vertex sequence to its smallest vertex and orient it
    toward the smaller of that vertex's two cycle neighbours."""
    seq = list(vertices)
    k = len(seq)
    start = seq.index(min(seq))
    rotated = seq[start:] + seq[:start]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


# ---------------------------------------------------------------------------
# Checks


def check_proper_edge(x: EdgeColouring) -> Optional[NotProper]:
    """None iff no vertex carries two incident edges of equal colour."""
    g = x.graph
    for v in range(g.n):
        seen: dict[int, int] = {}
        for ei in g.incident_edges(v):
            c = x.colours[ei]
            if c in seen:
                return NotProper(v, g.edges[seen[c]], g.edges[ei])
            seen[c] = ei
    return None


def check_proper_vertex(y: VertexColouring) -> Optional[Edge]:
    """None iff no edge is monochromatic; otherwise the first such edge."""
    for u, v in y.graph.edges:
        if y.colours[u] == y.colours[v]:
            return (u, v)
    return None


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        return True


def _two_colour_cycle(g: Graph, x: EdgeColouring, a: int, b: int) -> Optional[tuple[int, ...]]:
    """First cycle in the subgraph of a- and b-coloured edges, as vertices."""
    uf = _UnionFind(g.n)
    adj: dict[int, list[int]] = {}
    for ei, (u, v) in enumerate(g.edges):
        if x.colours[ei] != a and x.colours[ei] != b:
            continue
        if not uf.union(u, v):
            # u and v already joined: the unique tree path plus (u, v) closes
            # the witness cycle
            path = _tree_path(adj, u, v)
            return canonical_cycle(path)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return None


def _tree_path(adj: dict[int, list[int]], u: int, v: int) -> list[int]:
    prev = {u: u}
    stack = [u]
    while stack:
        w = stack.pop()
        if w == v:
            break
        for nxt in adj.get(w, ()):
            if nxt not in prev:
                prev[nxt] = w
                stack.append(nxt)
    out = [v]
    while out[-1] != u:
        out.append(prev[out[-1]])
    return out


def find_bichromatic_cycle(x: EdgeColouring) -> Optional[BichromaticCycle]:
    """First two-colour cycle, scanning colour pairs in palette order.

    Properness is a precondition: alternation is only well-defined for
    proper colourings, so an improper input is rejected outright.
    """
    bad = check_proper_edge(x)
    if bad is not None:
        raise ValueError(f"colouring is not proper: {bad}")
    used = x.distinct_colours()
    for i in range(len(used)):
        for j in range(i + 1, len(used)):
            cyc = _two_colour_cycle(x.graph, x, used[i], used[j])
            if cyc is not None:
                return BichromaticCycle(used[i], used[j], cyc)
    return None


def check_acyclic(x: EdgeColouring) -> Optional[Violation]:
    """Full verification: properness first, then the forest check per pair."""
    bad = check_proper_edge(x)
    if bad is not None:
        return bad
    return find_bichromatic_cycle(x)
