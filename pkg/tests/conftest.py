from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from listbrooks.graph import Graph, build_graph

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def acceptance_log():
    """Record ``(criterion, passed, detail)`` for the end-of-run summary."""

    def record(name: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE[name] = (passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        passed, detail = _ACCEPTANCE[name]
        terminalreporter.line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")


def enumerate_colorings(g: Graph, lists):
    """Every proper list colouring, by brute force over the product of lists."""
    for combo in itertools.product(*[sorted(set(lv)) for lv in lists]):
        if all(combo[u] != combo[v] for u, v in g.edges()):
            yield list(combo)


def is_colorable_brute(g: Graph, lists) -> bool:
    return next(enumerate_colorings(g, lists), None) is not None


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@st.composite
def graphs_with_lists(draw, max_n: int = 8, max_palette: int = 5, min_size: int = 1, max_size: int = 4):
    g = draw(graphs(max_n=max_n))
    palette = draw(st.integers(max(min_size, 1), max_palette))
    lists = []
    for _ in range(g.n):
        size = draw(st.integers(min_size, min(max_size, palette)))
        lists.append(tuple(sorted(draw(st.sets(st.integers(1, palette), min_size=size, max_size=size)))))
    return g, lists
