"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored as sorted tuples so that every neighbour walk in the
package is ascending; all downstream tie-breaks rely on that.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence


class GraphError(ValueError):
    """Raised when an edge list does not describe a simple graph."""


class Graph:
    """Simple undirected graph with sorted adjacency tuples.

    Use :func:`build_graph` to construct from an edge list; the constructor
    itself trusts its input and is meant for internal use.
    """

    __slots__ = ("n", "adj", "_sets")

    def __init__(self, n: int, adj: Sequence[tuple[int, ...]]):
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(adj)
        self._sets: tuple[frozenset[int], ...] | None = None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if self._sets is None:
            self._sets = tuple(frozenset(a) for a in self.adj)
        return v in self._sets[u]

    def neighbor_set(self, v: int) -> frozenset[int]:
        if self._sets is None:
            self._sets = tuple(frozenset(a) for a in self.adj)
        return self._sets[v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate pairs collapse to one edge.

    Raises :class:`GraphError` on a self-loop or an out-of-range id.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an id outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, [tuple(sorted(s)) for s in nbrs])


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted tuples, ordered by their smallest member."""
    seen = bytearray(g.n)
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = 1
                    comp.append(y)
                    stack.append(y)
        comp.sort()
        comps.append(tuple(comp))
    return comps


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adj), default=0)


def is_complete(g: Graph, s: Sequence[int]) -> bool:
    """True iff every pair of distinct vertices in ``s`` is adjacent."""
    members = list(s)
    for i, u in enumerate(members):
        nb = g.neighbor_set(u)
        for v in members[i + 1:]:
            if v not in nb:
                return False
    return True


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s`` plus the id map.

    The returned tuple ``ids`` sends new id ``i`` to old id ``ids[i]``; it is
    ``s`` in ascending order. When ``s`` covers every vertex, ``g`` itself is
    returned (graphs are immutable, so sharing is safe).
    """
    ids = tuple(sorted(set(s)))
    if len(ids) == g.n:
        return g, ids
    new_id = {old: i for i, old in enumerate(ids)}
    adj = []
    for old in ids:
        adj.append(tuple(new_id[w] for w in g.adj[old] if w in new_id))
    return Graph(len(ids), adj), ids
