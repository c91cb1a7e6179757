import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import brute_aci, feasible
from boxcolour.colouring import EdgeColouring, check_acyclic, colours_used
from boxcolour.corpus import connected_graphs_up_to
from boxcolour.graphs import Graph, complete, cycle, hypercube, path
from boxcolour.solver import (
    AciResult,
    SearchBudget,
    _edge_order,
    exact_aci,
    greedy_acyclic,
    lower_bound,
)


def test_lower_bound_examples():
    assert lower_bound(complete(2)) == 1
    assert lower_bound(cycle(4)) == 3
    assert lower_bound(hypercube(3)) == 4
    assert lower_bound(path(5)) == 2
    assert lower_bound(Graph(4, [(0, 1), (0, 2), (0, 3)])) == 3
    assert lower_bound(Graph(1, [])) == 0


def test_exact_known_values():
    for g, want in [
        (complete(2), 1),
        (path(5), 2),
        (cycle(4), 3),
        (cycle(5), 3),
        (cycle(6), 3),
        (hypercube(3), 4),
        (complete(4), 5),
        (complete(5), 5),
    ]:
        r = exact_aci(g)
        assert r.aci == want, (g.edges, r.aci, want)
        assert not r.exhausted
        assert r.lower == r.aci == r.upper


def test_witness_is_verified_and_tight():
    r = exact_aci(complete(5))
    assert check_acyclic(r.witness) is None
    assert colours_used(r.witness) == r.aci
    assert r.witness.palette.size == r.aci


def test_empty_and_trivial_graphs():
    r = exact_aci(Graph(1, []))
    assert r.aci == 0 and r.witness.colours == ()
    r = exact_aci(Graph(3, [(0, 1)]))
    assert r.aci == 1


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    with pytest.raises(ValueError):
        SearchBudget(max_time=0)


def test_budget_exhaustion_reports_bounds():
    r = exact_aci(complete(7), SearchBudget(max_nodes=5, max_time=60))
    assert r.exhausted
    assert r.aci is None and r.witness is None
    # K7 is 6-regular, so the search floor is 7; 5 nodes cannot settle it
    assert r.lower == 7
    assert r.upper >= r.lower
    assert r.nodes >= 5


def test_determinism():
    a = exact_aci(complete(5))
    b = exact_aci(complete(5))
    assert a.aci == b.aci and a.nodes == b.nodes
    assert a.witness == b.witness


def test_greedy_examples():
    assert colours_used(greedy_acyclic(complete(2))) == 1
    assert colours_used(greedy_acyclic(path(5))) == 2
    x = greedy_acyclic(complete(6))
    assert 5 <= colours_used(x) <= 15
    assert check_acyclic(x) is None


def test_greedy_seeds():
    g = complete(5)
    assert greedy_acyclic(g, seed=2).colours == greedy_acyclic(g, seed=2).colours
    for seed in range(4):
        assert check_acyclic(greedy_acyclic(g, seed=seed)) is None


def test_bound_sandwich_on_small_corpus():
    for g in connected_graphs_up_to(5):
        r = exact_aci(g)
        assert lower_bound(g) <= r.aci <= colours_used(greedy_acyclic(g))


def test_oracle_agreement_up_to_five_vertices():
    for g in connected_graphs_up_to(5):
        assert exact_aci(g).aci == brute_aci(g), g.edges


def test_oracle_cap_is_sound_on_small_graphs():
    for g in connected_graphs_up_to(4):
        assert brute_aci(g, use_cap=True) == brute_aci(g, use_cap=False), g.edges


def test_infeasibility_certificate():
    # one colour below the reported index must be infeasible for the
    # independent checker too
    for g in [cycle(4), complete(4), hypercube(3)]:
        k = exact_aci(g).aci
        assert not feasible(g, k - 1)
        assert feasible(g, k)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.data())
def test_random_graphs_match_oracle(n, data):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = data.draw(
        st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=len(pairs))
    )
    g = Graph(n, chosen)
    r = exact_aci(g)
    assert r.aci == brute_aci(g)
    assert check_acyclic(r.witness) is None


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 7), st.integers(0, 5), st.data())
def test_greedy_always_verifies(n, seed, data):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    g = Graph(n, chosen)
    x = greedy_acyclic(g, seed=seed)
    assert check_acyclic(x) is None


def test_incremental_detection_agrees_with_full_verifier():
    # replay every witness through the independent verifier one edge at a
    # time, in the order the search assigns; each accepted partial state
    # must already pass the full properness and forest checks
    for g in connected_graphs_up_to(6):
        r = exact_aci(g)
        order = _edge_order(g)
        for cut in range(1, g.m + 1):
            kept = [g.edges[i] for i in order[:cut]]
            sub = Graph(g.n, kept)
            colours = {e: r.witness.colour_of(*e) for e in sub.edges}
            partial = EdgeColouring.from_edge_map(sub, colours, r.witness.palette)
            assert check_acyclic(partial) is None
