"""Enumeration of small connected graphs up to isomorphism.

Built by augmentation: every connected graph on n vertices is a connected
graph on n-1 vertices plus one new vertex joined to a non-empty subset
(delete any leaf of a spanning tree to see this).  Candidates are bucketed
by cheap invariants and deduplicated with a backtracking isomorphism test.

Class counts for n = 1..7: 1, 1, 2, 6, 21, 112, 853.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph

_CACHE: dict[int, tuple[Graph, ...]] = {}


def _invariant(g: Graph) -> tuple:
    """Cheap isomorphism invariant used for bucketing."""
    per_vertex = sorted(
        (g.degree(v), tuple(sorted(g.degree(w) for w in g.neighbours(v))))
        for v in range(g.n)
    )
    triangles = sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    )
    return (g.n, g.m, triangles, tuple(per_vertex))


def _isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking vertex-map search; callers pre-filter by _invariant."""
    if g.n != h.n or g.m != h.m:
        return False
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(pos: int) -> bool:
        if pos == g.n:
            return True
        v = order[pos]
        for w in range(h.n):
            if used[w] or g.degree(v) != h.degree(w):
                continue
            ok = True
            for prev in order[:pos]:
                if g.has_edge(v, prev) != h.has_edge(w, mapping[prev]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(pos + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return extend(0)


def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n in _CACHE:
        return _CACHE[n]
    if n == 1:
        reps = (Graph(1, []),)
        _CACHE[1] = reps
        return reps

    buckets: dict[tuple, list[Graph]] = {}
    new = n - 1
    for base in connected_graphs(n - 1):
        for size in range(1, n):
            for subset in combinations(range(n - 1), size):
                cand = Graph(n, list(base.edges) + [(v, new) for v in subset])
                key = _invariant(cand)
                bucket = buckets.setdefault(key, [])
                if not any(_isomorphic(cand, seen) for seen in bucket):
                    bucket.append(cand)

    reps = tuple(g for bucket in buckets.values() for g in bucket)
    _CACHE[n] = reps
    return reps


def connected_graphs_up_to(max_n: int) -> list[Graph]:
    """Corpus of all connected graphs with 1..max_n vertices, ordered by n."""
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(connected_graphs(n))
    return out
