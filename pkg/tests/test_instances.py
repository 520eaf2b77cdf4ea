import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from listbrooks.graph import connected_components, max_degree
from listbrooks.instances import (
    gen_block_lists,
    gen_lists,
    gen_named,
    gen_random_connected,
    gen_random_regular,
)


def _girth(g):
    best = None
    for s in range(g.n):
        dist, parent, frontier = {s: 0}, {s: None}, [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in g.adj[x]:
                    if y not in dist:
                        dist[y], parent[y] = dist[x] + 1, x
                        nxt.append(y)
                    elif parent[x] != y:
                        length = dist[x] + dist[y] + 1
                        best = length if best is None else min(best, length)
            frontier = nxt
    return best


def test_cycle_3_is_triangle():
    g = gen_named("cycle", 3)
    assert g == gen_named("complete", 3)


def test_petersen_facts():
    g = gen_named("petersen")
    assert (g.n, g.m) == (10, 15)
    assert all(g.degree(v) == 3 for v in range(10))
    assert _girth(g) == 5


def test_complete_4():
    g = gen_named("complete", 4)
    assert g.m == 6 and all(g.degree(v) == 3 for v in range(4))


def test_prism_labeling():
    g = gen_named("prism")
    assert g.edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)]


@pytest.mark.parametrize("kind, n", [("cycle", 2), ("path", 0), ("complete", 0), ("wheel", 5)])
def test_named_errors(kind, n):
    with pytest.raises(ValueError):
        gen_named(kind, n)


@pytest.mark.parametrize("seed", [0, 1, 99])
def test_regular_4_3_is_k4(seed):
    assert gen_random_regular(4, 3, seed) == gen_named("complete", 4)


def test_regular_errors():
    with pytest.raises(ValueError, match="even"):
        gen_random_regular(5, 3, 0)
    with pytest.raises(ValueError):
        gen_random_regular(4, 4, 0)


def test_regular_seed_42():
    g = gen_random_regular(10, 3, 42)
    assert all(g.degree(v) == 3 for v in range(10))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 40), st.integers(0, 6), st.integers(0, 2**64 - 1))
def test_regular_is_simple_and_regular(n, d, seed):
    assume(d < n and n * d % 2 == 0)
    g = gen_random_regular(n, d, seed)
    assert all(g.degree(v) == d for v in range(n))
    assert g == gen_random_regular(n, d, seed)


def test_connected_examples():
    g = gen_random_connected(2, 1, 0)
    assert g.edges() == [(0, 1)]
    g = gen_random_connected(5, 4, 7)
    assert len(connected_components(g)) == 1 and max_degree(g) <= 4
    assert gen_random_connected(1, 3, 0).n == 1


def test_connected_infeasible_cap():
    with pytest.raises(ValueError):
        gen_random_connected(3, 1, 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 60), st.integers(2, 6), st.integers(0, 2**64 - 1))
def test_connected_postconditions(n, dmax, seed):
    g = gen_random_connected(n, dmax, seed)
    assert len(connected_components(g)) == 1
    assert max_degree(g) <= dmax
    assert g == gen_random_connected(n, dmax, seed)


def test_lists_forced_by_palette():
    g = gen_named("petersen")
    assert gen_lists(g, 3, 3, 5) == [(1, 2, 3)] * 10
    assert gen_lists(gen_named("cycle", 5), 2, 2, 0) == [(1, 2)] * 5


def test_lists_sizes_and_reproducibility():
    g = gen_named("prism")
    lists = gen_lists(g, 3, 6, 1)
    assert all(len(set(lv)) == 3 and set(lv) <= set(range(1, 7)) for lv in lists)
    assert lists == gen_lists(g, 3, 6, 1)


def test_lists_errors():
    with pytest.raises(ValueError):
        gen_lists(gen_named("prism"), 4, 3, 0)


def test_block_lists():
    lists = gen_block_lists(gen_named("petersen"), 3, 2, 11)
    assert set(lists) <= {(1, 2, 3), (4, 5, 6)}
