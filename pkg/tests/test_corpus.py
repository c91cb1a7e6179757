import itertools

import networkx as nx
import pytest

from boxcolour.corpus import _isomorphic, connected_graphs, connected_graphs_up_to
from boxcolour.graphs import is_connected


def test_known_class_counts():
    assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_everything_is_connected_with_the_right_order():
    for n in range(1, 7):
        for g in connected_graphs(n):
            assert g.n == n
            assert is_connected(g)


def test_classes_are_pairwise_non_isomorphic():
    for n in range(1, 6):
        reps = connected_graphs(n)
        for a, b in itertools.combinations(reps, 2):
            assert not _isomorphic(a, b), (a.edges, b.edges)


def test_counts_match_the_networkx_atlas():
    # the atlas lists every graph on up to 7 vertices, one per class
    per_n = {n: 0 for n in range(1, 8)}
    for G in nx.graph_atlas_g()[1:]:
        n = G.number_of_nodes()
        if 1 <= n <= 7 and nx.is_connected(G):
            per_n[n] += 1
    assert per_n == {n: len(connected_graphs(n)) for n in range(1, 8)}


def test_classes_cover_the_atlas_up_to_five():
    # every connected atlas graph is isomorphic to exactly one of ours
    from boxcolour.graphs import Graph

    for n in range(2, 6):
        reps = connected_graphs(n)
        for G in nx.graph_atlas_g()[1:]:
            if G.number_of_nodes() != n or not nx.is_connected(G):
                continue
            g = Graph(n, list(G.edges()))
            hits = sum(1 for rep in reps if _isomorphic(g, rep))
            assert hits == 1


def test_up_to_concatenates_in_order():
    out = connected_graphs_up_to(4)
    assert [g.n for g in out] == [1, 2, 3, 3, 4, 4, 4, 4, 4, 4]


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        connected_graphs(0)
