import itertools

import pytest
from hypothesis import given, settings

from listbrooks.graph import (
    GraphError,
    build_graph,
    connected_components,
    induced_subgraph,
    is_complete,
    max_degree,
)
from listbrooks.instances import gen_named

from conftest import graphs


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert [g.degree(v) for v in range(3)] == [1, 2, 1]
    assert g.adj == ((1,), (0, 2), (1,))


def test_duplicate_edges_collapse():
    g = build_graph(2, [(0, 1), (1, 0)])
    assert g.m == 1


def test_self_loop_rejected():
    with pytest.raises(GraphError, match="self-loop"):
        build_graph(1, [(0, 0)])


def test_out_of_range_rejected():
    with pytest.raises(GraphError):
        build_graph(2, [(0, 2)])


@pytest.mark.parametrize(
    "n, edges, expected",
    [
        (3, [(0, 1), (1, 2)], [(0, 1, 2)]),
        (4, [(0, 1), (2, 3)], [(0, 1), (2, 3)]),
        (1, [], [(0,)]),
        (5, [(4, 0), (1, 3)], [(0, 4), (1, 3), (2,)]),
    ],
)
def test_connected_components(n, edges, expected):
    assert connected_components(build_graph(n, edges)) == expected


@pytest.mark.parametrize(
    "g, d",
    [
        (gen_named("complete", 4), 3),
        (gen_named("cycle", 5), 2),
        (build_graph(4, [(0, 1), (0, 2), (0, 3)]), 3),
        (build_graph(3, []), 0),
    ],
)
def test_max_degree(g, d):
    assert max_degree(g) == d


def test_is_complete_examples():
    assert is_complete(gen_named("complete", 4), range(4))
    assert not is_complete(gen_named("cycle", 4), range(4))
    assert is_complete(gen_named("cycle", 4), [2])


def test_induced_subgraph_examples():
    c5 = gen_named("cycle", 5)
    h, ids = induced_subgraph(c5, [1, 2, 3, 4])
    assert ids == (1, 2, 3, 4)
    assert h.edges() == [(0, 1), (1, 2), (2, 3)]

    h, ids = induced_subgraph(c5, range(5))
    assert ids == tuple(range(5)) and h == c5

    h, ids = induced_subgraph(gen_named("complete", 4), [0, 1])
    assert h.edges() == [(0, 1)]


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m == 2 * len(g.edges())


@given(graphs())
def test_adjacency_invariants(g):
    for v in range(g.n):
        assert v not in g.adj[v]
        assert list(g.adj[v]) == sorted(set(g.adj[v]))
        for u in g.adj[v]:
            assert 0 <= u < g.n and v in g.adj[u]


@given(graphs())
def test_components_partition(g):
    comps = connected_components(g)
    flat = [v for c in comps for v in c]
    assert sorted(flat) == list(range(g.n))
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)
    for c in comps:
        assert list(c) == sorted(c)
        # no edge leaves a component
        members = set(c)
        assert all(u in members for v in c for u in g.adj[v])


@given(graphs())
def test_induced_all_is_identity(g):
    h, ids = induced_subgraph(g, range(g.n))
    assert ids == tuple(range(g.n))
    assert h.edges() == g.edges()


@settings(max_examples=60)
@given(graphs())
def test_is_complete_matches_pairwise_check(g):
    for r in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            brute = all(v in g.adj[u] for u, v in itertools.combinations(s, 2))
            assert is_complete(g, s) == brute
