"""Independent brute-force oracle for the acyclic chromatic index.

Deliberately shares nothing with the solver's machinery: edges are taken
in plain index order, properness is a direct scan of incident edges, and
acyclicity is a from-scratch union-find pass per colour pair.  A partial
colouring containing a bichromatic cycle can never extend to one without
(extensions only add edges), so pruning on partial violations still
enumerates every acyclic colouring.

The first-use colour cap is the one shared idea (colour c is allowed only
if all smaller colours appear already); it is sound because any colouring
can be relabelled into first-use order along the fixed edge sequence.
`use_cap=False` disables it, so tests can cross-check the cap itself.
"""

from boxcolour.graphs import Graph


def _pair_has_cycle(g: Graph, colours: list[int], a: int, b: int) -> bool:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ei, (u, v) in enumerate(g.edges):
        c = colours[ei]
        if c == a or c == b:
            ru, rv = find(u), find(v)
            if ru == rv:
                return True
            parent[ru] = rv
    return False


def _proper_at(g: Graph, colours: list[int], i: int) -> bool:
    u, v = g.edges[i]
    c = colours[i]
    for w in (u, v):
        hits = 0
        for ei in g.incident_edges(w):
            if colours[ei] == c:
                hits += 1
                if hits > 1:
                    return False
    return True


def feasible(g: Graph, k: int, use_cap: bool = True) -> bool:
    """Does g admit an acyclic proper edge colouring with k colours?"""
    colours = [-1] * g.m

    def extend(i: int, used: int) -> bool:
        if i == g.m:
            return True
        top = min(k, used + 1) if use_cap else k
        for c in range(top):
            colours[i] = c
            if _proper_at(g, colours, i):
                others = set(colours[:i]) - {c}
                if not any(_pair_has_cycle(g, colours, c, c2) for c2 in others):
                    if extend(i + 1, max(used, c + 1)):
                        return True
        colours[i] = -1
        return False

    return extend(0, 0)


def brute_aci(g: Graph, use_cap: bool = True) -> int:
    """Smallest feasible colour count, from the properness floor upward."""
    if g.m == 0:
        return 0
    for k in range(max(g.max_degree, 1), g.m + 1):
        if feasible(g, k, use_cap):
            return k
    raise AssertionError("m distinct colours are always feasible")
