"""Exact and heuristic acyclic edge colouring of small graphs.

`exact_aci` is the ground-truth oracle: iterative deepening on the colour
count k, and for each k a backtracking search over edges in a fixed order
(degree-sum descending).  Pruning per assignment:

  - properness via per-vertex colour bitmasks,
  - canonical symmetry breaking (a colour may be opened only if every
    smaller colour has been used already),
  - acyclicity via alternating-path walks: a new bichromatic cycle through
    the edge being coloured must alternate its colour c with some colour
    c' already present at both endpoints, and the {c, c'} subgraph has
    maximum degree two, so a single forced walk decides it.

First feasible k is exact; the run at k-1 having been exhausted is the
infeasibility certificate.  All tie-breaking is lexicographic by
(edge index, colour index) for reproducibility.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Optional

from .colouring import EdgeColouring, check_acyclic
from .graphs import Graph


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 100_000_000
    max_time: float = 60.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_time <= 0:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class AciResult:
    """Outcome of an exact solve.

    On success `aci` is the exact value, `witness` a verified colouring with
    exactly `aci` colours, and lower == aci == upper.  If the budget ran out
    `aci` and `witness` are None, `exhausted` is True, and [lower, upper]
    are the best certified bounds.
    """

    aci: Optional[int]
    witness: Optional[EdgeColouring]
    nodes: int
    seconds: float
    exhausted: bool
    lower: int
    upper: Optional[int]


class _OutOfBudget(Exception):
    pass


def lower_bound(g: Graph) -> int:
    """Max degree, plus one when the graph is regular of degree above one.

    The extra one is forced: in a proper Δ-edge-colouring of a Δ-regular
    graph every colour class is a perfect matching, and any two perfect
    matchings union to a disjoint set of bichromatic cycles.
    """
    delta = g.max_degree
    if delta > 1 and all(d == delta for d in g.degrees):
        return delta + 1
    return delta


class _Partial:
    """Mutable partial colouring with O(cycle) acyclicity tests.

    mask[v] is the bitmask of colours incident to v; at[v][c] is the
    neighbour joined to v by the c-coloured edge (unique by properness).
    """

    __slots__ = ("mask", "at")

    def __init__(self, n: int):
        self.mask = [0] * n
        self.at: list[dict[int, int]] = [dict() for _ in range(n)]

    def blocked(self, u: int, v: int, c: int) -> bool:
        return bool((self.mask[u] | self.mask[v]) & (1 << c))

    def creates_cycle(self, u: int, v: int, c: int) -> bool:
        """Would colouring the uncommitted edge (u, v) with c close a
        bichromatic cycle?  Walk the forced {c, c'} path from u for each
        candidate partner colour c'; reaching v closes the cycle."""
        at = self.at
        cand = self.mask[u] & self.mask[v]
        while cand:
            low = cand & -cand
            cp = low.bit_length() - 1
            cand ^= low
            pos = at[u][cp]
            expect = c
            while True:
                if pos == v:
                    return True
                nxt = at[pos].get(expect)
                if nxt is None:
                    break
                pos = nxt
                expect = cp if expect == c else c
        return False

    def assign(self, u: int, v: int, c: int) -> None:
        bit = 1 << c
        self.mask[u] |= bit
        self.mask[v] |= bit
        self.at[u][c] = v
        self.at[v][c] = u

    def unassign(self, u: int, v: int, c: int) -> None:
        bit = 1 << c
        self.mask[u] ^= bit
        self.mask[v] ^= bit
        del self.at[u][c]
        del self.at[v][c]


def _edge_order(g: Graph) -> list[int]:
    return sorted(
        range(g.m), key=lambda i: (-(g.degree(g.edges[i][0]) + g.degree(g.edges[i][1])), i)
    )


def exact_aci(g: Graph, budget: Optional[SearchBudget] = None) -> AciResult:
    """Exact acyclic chromatic index with a verified witness."""
    budget = budget or SearchBudget()
    t0 = time.perf_counter()

    if g.m == 0:
        witness = EdgeColouring.single_family(g, [], 0)
        return AciResult(0, witness, 0, time.perf_counter() - t0, False, 0, 0)

    order = _edge_order(g)
    edges = g.edges
    nodes = 0

    def search(k: int) -> Optional[list[int]]:
        nonlocal nodes
        colours = [-1] * g.m
        state = _Partial(g.n)

        def place(pos: int, maxc: int) -> bool:
            nonlocal nodes
            if pos == g.m:
                return True
            ei = order[pos]
            u, v = edges[ei]
            for c in range(min(k, maxc + 2)):
                if state.blocked(u, v, c) or state.creates_cycle(u, v, c):
                    continue
                nodes += 1
                if nodes > budget.max_nodes:
                    raise _OutOfBudget
                if nodes % 2048 == 0 and time.perf_counter() - t0 > budget.max_time:
                    raise _OutOfBudget
                colours[ei] = c
                state.assign(u, v, c)
                if place(pos + 1, c if c > maxc else maxc):
                    return True
                colours[ei] = -1
                state.unassign(u, v, c)
            return False

        return colours if place(0, -1) else None

    start = max(lower_bound(g), 1)
    for k in range(start, g.m + 1):
        try:
            found = search(k)
        except _OutOfBudget:
            upper = len(set(greedy_acyclic(g).colours))
            return AciResult(
                None, None, nodes, time.perf_counter() - t0, True, k, upper
            )
        if found is not None:
            witness = EdgeColouring.single_family(g, found, k)
            bad = check_acyclic(witness)
            if bad is not None:
                raise RuntimeError(f"solver produced an invalid witness: {bad}")
            return AciResult(k, witness, nodes, time.perf_counter() - t0, False, k, k)
    raise RuntimeError("unreachable: m distinct colours are always acyclic")


def greedy_acyclic(g: Graph, seed: int = 0) -> EdgeColouring:
    """First-fit acyclic colouring, opening a new colour when none fits.

    Seed 0 keeps the natural edge order; any other seed shuffles it.
    Always succeeds: a colour incident to neither endpoint passes both
    checks, so first-fit never needs more than 2(Δ-1)+1 colours.
    """
    order = list(range(g.m))
    if seed != 0:
        random.Random(seed).shuffle(order)
    colours = [-1] * g.m
    state = _Partial(g.n)
    for ei in order:
        u, v = g.edges[ei]
        c = 0
        while state.blocked(u, v, c) or state.creates_cycle(u, v, c):
            c += 1
        colours[ei] = c
        state.assign(u, v, c)
    k = max(colours) + 1 if g.m else 0
    x = EdgeColouring.single_family(g, colours, k)
    bad = check_acyclic(x)
    if bad is not None:
        raise RuntimeError(f"greedy produced an invalid colouring: {bad}")
    return x
