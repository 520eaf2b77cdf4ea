"""Verifier for list colourings and an exhaustive backtracking oracle."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graph import Graph

DEFAULT_NODE_LIMIT = 10**7

EDGE_CONFLICT = "edge-conflict"
NOT_IN_LIST = "color-not-in-list"
UNCOLORED = "uncolored-vertex"


@dataclass(frozen=True)
class Violation:
    kind: str
    vertices: tuple[int, ...]
    colors: tuple[int, ...] = ()

    def __str__(self) -> str:
        vs = ",".join(map(str, self.vertices))
        cs = ",".join(map(str, self.colors))
        return f"{self.kind}({vs}{';' + cs if cs else ''})"


class SearchLimitExceeded(RuntimeError):
    """The oracle ran out of node budget; says nothing about feasibility."""


def verify_coloring(g: Graph, lists: Sequence[Iterable[int]], f: Sequence[int | None]) -> list[Violation]:
    """All ways in which ``f`` fails to be a proper list colouring.

    Vertex-level problems come first in id order, then edge conflicts in
    lexicographic ``(u, v)`` order. An empty result means ``f`` is total,
    respects the lists and has no monochromatic edge.
    """
    out = []
    for v in range(g.n):
        c = f[v] if v < len(f) else None
        if c is None:
            out.append(Violation(UNCOLORED, (v,)))
        elif c not in set(lists[v]):
            out.append(Violation(NOT_IN_LIST, (v,), (c,)))
    for u, v in g.edges():
        cu = f[u] if u < len(f) else None
        if cu is not None and cu == (f[v] if v < len(f) else None):
            out.append(Violation(EDGE_CONFLICT, (u, v), (cu,)))
    return out


def solve_exact(g: Graph, lists: Sequence[Iterable[int]], node_limit: int = DEFAULT_NODE_LIMIT) -> list[int] | None:
    """Exhaustive list colouring search.

    Vertices are visited by ascending list size, then id; colours ascending.
    Returns a colouring, or ``None`` when none exists. Raises
    :class:`SearchLimitExceeded` after ``node_limit`` colour assignments.
    """
    ls = [sorted(set(x)) for x in lists]
    n = g.n
    order = sorted(range(n), key=lambda v: (len(ls[v]), v))
    color: list[int | None] = [None] * n
    cursor = [0] * (n + 1)
    depth = 0
    nodes = 0
    while depth >= 0:
        if depth == n:
            return list(color)
        v = order[depth]
        cands = ls[v]
        i = cursor[depth]
        nbrs = g.adj[v]
        while i < len(cands) and any(color[u] == cands[i] for u in nbrs):
            i += 1
        if i == len(cands):
            color[v] = None
            cursor[depth] = 0
            depth -= 1
            continue
        nodes += 1
        if nodes > node_limit:
            raise SearchLimitExceeded(f"node limit {node_limit} exhausted")
        color[v] = cands[i]
        cursor[depth] = i + 1
        depth += 1
    return None
