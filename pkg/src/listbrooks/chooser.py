"""Constructive Delta-list-colouring of connected graphs other than K_{Delta+1}.

Per connected component ``H`` with maximum degree ``d``:

* ``d <= 2``: exact routine for isolated vertices, paths and cycles.
* ``H = K_{d+1}``: greedy if every list has more than ``d`` colours, else
  :class:`NotApplicable`.
* otherwise every list is trimmed to its ``d`` smallest colours, vertices of
  degree below ``d`` are peeled off, each remaining ``d``-regular core
  component is coloured directly, and the peeled vertices are coloured in
  reverse removal order.

A regular core component is handled through a path ``v1 v2 v3 ...`` grown
from a non-adjacent pair ``v1, v3`` with common neighbour ``v2``. The last
path vertex closes a cycle through its earliest path neighbour; a short cycle
is coloured after the rest of the graph, and a Hamiltonian one through a
fixed vertex order ending at ``v2``. In both branches two "anchor" colours are
picked up front so that the last vertex of a greedy sweep keeps a free colour.

Everything is deterministic: every tie is broken towards the smallest vertex
id or colour.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, fields
from enum import Enum

from .graph import (
    Graph,
    connected_components,
    induced_subgraph,
    is_complete,
    max_degree,
)

Lists = Sequence[tuple[int, ...]]
PartialColoring = list  # list[int | None], indexed by vertex


class InvariantError(RuntimeError):
    """An internal guarantee failed; always a bug, never infeasibility."""


class Reason(str, Enum):
    COMPLETE_COMPONENT = "complete-component"
    LIST_TOO_SHORT = "list-too-short"


@dataclass(frozen=True)
class Success:
    coloring: tuple[int, ...]


@dataclass(frozen=True)
class Infeasible:
    witness: str
    component: tuple[int, ...]


@dataclass(frozen=True)
class NotApplicable:
    reason: Reason
    component: tuple[int, ...]


Outcome = Success | Infeasible | NotApplicable


@dataclass
class TraceCounters:
    """Hit counts per branch of the construction."""

    peel: int = 0
    small_degree: int = 0
    special_case: int = 0
    hamiltonian: int = 0
    eq1_case_a: int = 0
    eq1_case_b: int = 0
    eq1_case_c: int = 0
    eq2_case_common: int = 0
    eq2_case_left: int = 0
    eq2_case_right: int = 0

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def add(self, other: TraceCounters) -> None:
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))


def normalize_lists(g: Graph, lists: Sequence[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    if len(lists) != g.n:
        raise ValueError(f"expected {g.n} lists, got {len(lists)}")
    out = []
    for v, colors in enumerate(lists):
        lv = tuple(sorted(set(colors)))
        if not lv:
            raise ValueError(f"list of vertex {v} is empty")
        if lv[0] < 0:
            raise ValueError(f"list of vertex {v} has a negative colour")
        out.append(lv)
    return tuple(out)


def list_color(g: Graph, lists: Sequence[Iterable[int]]) -> tuple[Outcome, TraceCounters]:
    """Colour ``g`` from ``lists``, one connected component at a time.

    If any component is infeasible the first such :class:`Infeasible` is
    returned; otherwise the first :class:`NotApplicable`, if any. Component
    ids in either refer to ``g``.
    """
    norm = normalize_lists(g, lists)
    counters = TraceCounters()
    return _color_graph(g, norm, counters), counters


def _color_graph(g: Graph, lists: Lists, counters: TraceCounters) -> Outcome:
    coloring: list[int | None] = [None] * g.n
    infeasible: Infeasible | None = None
    not_applicable: NotApplicable | None = None
    for comp in connected_components(g):
        h, ids = induced_subgraph(g, comp)
        result = _color_component(h, [lists[v] for v in ids], counters)
        if isinstance(result, Success):
            for i, c in enumerate(result.coloring):
                coloring[ids[i]] = c
        elif isinstance(result, Infeasible):
            if infeasible is None:
                infeasible = Infeasible(result.witness, ids)
        elif not_applicable is None:
            not_applicable = NotApplicable(result.reason, ids)
    if infeasible is not None:
        return infeasible
    if not_applicable is not None:
        return not_applicable
    return Success(tuple(coloring))


def _color_component(h: Graph, lists: Lists, counters: TraceCounters) -> Outcome:
    everything = tuple(range(h.n))
    d = max_degree(h)
    if d <= 2:
        counters.small_degree += 1
        return color_small_degree(h, lists)
    if h.n == d + 1 and is_complete(h, everything):
        if all(len(lv) > d for lv in lists):
            partial = greedy_color_sequence(everything, h, lists, [None] * h.n)
            return Success(tuple(partial))
        return NotApplicable(Reason.COMPLETE_COMPONENT, everything)
    if any(len(lv) < d for lv in lists):
        return NotApplicable(Reason.LIST_TOO_SHORT, everything)

    trimmed = trim_lists(lists, d, everything)
    stack, core = peel(h, d)
    counters.peel += len(stack)
    partial: list[int | None] = [None] * h.n
    if core:
        core_graph, core_ids = induced_subgraph(h, core)
        for comp in connected_components(core_graph):
            piece, piece_ids = induced_subgraph(core_graph, comp)
            ids = [core_ids[i] for i in piece_ids]
            sub = color_regular_core(piece, [trimmed[v] for v in ids], d, counters)
            for i, c in enumerate(sub):
                partial[ids[i]] = c
    unwind_peel(stack, partial, trimmed)
    return Success(tuple(partial))


def trim_lists(lists: Lists, d: int, s: Iterable[int]) -> list[tuple[int, ...]]:
    """Cut the lists of vertices in ``s`` down to their ``d`` smallest colours."""
    out = list(lists)
    for v in s:
        lv = tuple(sorted(out[v]))
        if len(lv) < d:
            raise InvariantError(f"list of vertex {v} has {len(lv)} < {d} colours")
        out[v] = lv[:d]
    return out


def peel(g: Graph, d: int) -> tuple[list[tuple[int, tuple[int, ...]]], tuple[int, ...]]:
    """Strip vertices of current degree below ``d`` until none is left.

    Vertices below ``d`` at the start are taken in ascending id order, later
    ones in the order they drop below ``d``. Each removal records the
    neighbours still present at that moment. Returns the removal stack and
    the remaining core, whose vertices all have degree exactly ``d`` in it
    when the caller's precondition ``max_degree(g) <= d`` holds.
    """
    deg = [len(a) for a in g.adj]
    removed = bytearray(g.n)
    queue = deque(v for v in range(g.n) if deg[v] < d)
    stack = []
    while queue:
        v = queue.popleft()
        removed[v] = 1
        alive = tuple(u for u in g.adj[v] if not removed[u])
        if len(alive) >= d:
            raise InvariantError(f"peeled vertex {v} still has {len(alive)} neighbours")
        stack.append((v, alive))
        for u in alive:
            deg[u] -= 1
            if deg[u] == d - 1:
                queue.append(u)
    core = tuple(v for v in range(g.n) if not removed[v])
    return stack, core


def unwind_peel(stack, partial: PartialColoring, lists: Lists) -> PartialColoring:
    """Colour peeled vertices in reverse removal order, smallest free colour."""
    for v, nbrs in reversed(stack):
        used = {partial[u] for u in nbrs}
        for c in lists[v]:
            if c not in used:
                partial[v] = c
                break
        else:
            raise InvariantError(f"no free colour for peeled vertex {v}")
    return partial


def find_triple(h: Graph) -> tuple[int, int, int]:
    """Smallest ``v2`` with two non-adjacent neighbours ``v1 < v3``."""
    for v2 in range(h.n):
        nb = h.adj[v2]
        for i, v1 in enumerate(nb):
            s1 = h.neighbor_set(v1)
            for v3 in nb[i + 1:]:
                if v3 not in s1:
                    return v1, v2, v3
    raise InvariantError("no induced path on three vertices: graph is complete")


def extend_to_maximal_path(h: Graph, seed: Sequence[int]) -> list[int]:
    path = list(seed)
    on_path = set(path)
    while True:
        last = path[-1]
        nxt = next((u for u in h.adj[last] if u not in on_path), None)
        if nxt is None:
            return path
        path.append(nxt)
        on_path.add(nxt)


def farthest_neighbor_cycle(h: Graph, p: Sequence[int]) -> list[int]:
    """Cycle from the earliest path neighbour of the last vertex to the end."""
    last_nbrs = h.neighbor_set(p[-1])
    for i, x in enumerate(p):
        if x in last_nbrs:
            return list(p[i:])
    raise InvariantError("last path vertex has no neighbour on the path")


def color_regular_core(h: Graph, lists: Lists, d: int, counters: TraceCounters) -> PartialColoring:
    """Colour a connected ``d``-regular non-complete graph, ``d >= 3``."""
    v1, v2, v3 = find_triple(h)
    path = extend_to_maximal_path(h, (v1, v2, v3))
    if not h.neighbor_set(path[-1]) <= set(path):
        raise InvariantError("path is not maximal")
    cycle = farthest_neighbor_cycle(h, path)
    if len(cycle) < h.n:
        return handle_special_case(h, lists, cycle, counters)
    return handle_hamiltonian(h, lists, cycle, counters)


def choose_anchor_eq1(lu: Sequence[int], lv: Sequence[int], fw: int, counters: TraceCounters | None = None) -> int:
    """Colour for ``v`` so that ``L(u)`` meets ``{f(v), f(w)}`` at most once."""
    su, sv = set(lu), set(lv)
    if fw not in su:
        if counters is not None:
            counters.eq1_case_a += 1
        return min(sv)
    if fw in sv:
        if counters is not None:
            counters.eq1_case_b += 1
        return fw
    only_v = sv - su
    if not only_v:
        raise InvariantError(f"L(v)={sorted(sv)} is contained in L(u)={sorted(su)}")
    if counters is not None:
        counters.eq1_case_c += 1
    return min(only_v)


def choose_anchor_eq2(l1: Sequence[int], l2: Sequence[int], l3: Sequence[int],
                      counters: TraceCounters | None = None) -> tuple[int, int]:
    """Colours for the non-adjacent ends ``v1, v3`` hitting ``L(v2)`` at most once."""
    s1, s2, s3 = set(l1), set(l2), set(l3)
    common = s1 & s3
    if common:
        if counters is not None:
            counters.eq2_case_common += 1
        c = min(common)
        return c, c
    if s1 - s2:
        if counters is not None:
            counters.eq2_case_left += 1
        return min(s1 - s2), min(s3)
    # s1 <= s2 with equal sizes, so s1 == s2 and s3 misses s2 entirely
    if s3 & s2:
        raise InvariantError("anchor case analysis not exhaustive: lists of unequal size?")
    if counters is not None:
        counters.eq2_case_right += 1
    return min(s1), min(s3)


def handle_special_case(h: Graph, lists: Lists, cycle: Sequence[int], counters: TraceCounters) -> PartialColoring:
    """Cycle shorter than ``h`` whose last vertex has no neighbour off the cycle.

    The rest of the graph is coloured first, then ``v`` (a cycle vertex with
    no outside neighbours, next to ``u`` which has an outside neighbour ``w``)
    gets its anchor colour and the cycle is swept from ``v`` the long way
    round, finishing at ``u``.
    """
    counters.special_case += 1
    k = len(cycle)
    on_cycle = set(cycle)
    # walk from the last cycle vertex onwards, wrapping to the start
    walk = [cycle[-1], *cycle[:-1]]
    pos = None
    for idx, x in enumerate(walk):
        if any(y not in on_cycle for y in h.adj[x]):
            pos = idx
            break
    if pos is None:
        raise InvariantError("cycle has no vertex with an outside neighbour")
    if pos == 0:
        raise InvariantError("last path vertex has a neighbour off the cycle")
    u, v = walk[pos], walk[pos - 1]
    w = next(y for y in h.adj[u] if y not in on_cycle)

    rest_graph, rest_ids = induced_subgraph(h, (x for x in range(h.n) if x not in on_cycle))
    rest = _color_graph(rest_graph, [lists[x] for x in rest_ids], counters)
    if not isinstance(rest, Success):
        raise InvariantError(f"colouring the graph minus the cycle failed: {rest}")
    partial: list[int | None] = [None] * h.n
    for i, c in enumerate(rest.coloring):
        partial[rest_ids[i]] = c

    fw = partial[w]
    partial[v] = choose_anchor_eq1(lists[u], lists[v], fw, counters)
    if len(set(lists[u]) & {partial[v], fw}) > 1:
        raise InvariantError(f"anchor at v={v}: L(u) meets {{f(v), f(w)}} twice")

    # v, then away from u, ending at u
    order = [walk[(pos - 1 - t) % k] for t in range(k)]
    if order[0] != v or order[-1] != u:
        raise InvariantError("cycle enumeration does not run from v to u")
    greedy_color_sequence(order[1:], h, lists, partial)
    return partial


def handle_hamiltonian(h: Graph, lists: Lists, cycle: Sequence[int], counters: TraceCounters) -> PartialColoring:
    """Hamiltonian cycle ``v1 v2 ... vn`` starting with the chosen triple."""
    counters.hamiltonian += 1
    n = h.n
    v1, v2, v3 = cycle[0], cycle[1], cycle[2]
    if h.has_edge(v1, v3):
        raise InvariantError("v1 and v3 are adjacent")
    nb2 = h.neighbor_set(v2)
    j = next((idx for idx in range(3, n) if cycle[idx] in nb2), None)
    if j is None:
        raise InvariantError("v2 has no third neighbour")
    sigma = [v1, *cycle[2:j], *reversed(cycle[j:]), v2]

    position = {x: i for i, x in enumerate(sigma)}
    if len(position) != n:
        raise InvariantError("order is not a permutation")
    for x in sigma[:-1]:
        if not any(position[y] > position[x] for y in h.adj[x]):
            raise InvariantError(f"vertex {x} has no neighbour later in the order")

    partial: list[int | None] = [None] * n
    f1, f3 = choose_anchor_eq2(lists[v1], lists[v2], lists[v3], counters)
    partial[v1], partial[v3] = f1, f3
    if len(set(lists[v2]) & {f1, f3}) > 1:
        raise InvariantError(f"anchors at v1={v1}, v3={v3} hit L(v2) twice")
    greedy_color_sequence(sigma[2:], h, lists, partial)
    return partial


def greedy_color_sequence(order: Iterable[int], h: Graph, lists: Lists, partial: PartialColoring) -> PartialColoring:
    """Give each vertex its smallest colour unused by coloured neighbours.

    ``partial`` is updated in place and returned.
    """
    for x in order:
        used = {partial[y] for y in h.adj[x]}
        for c in lists[x]:
            if c not in used:
                partial[x] = c
                break
        else:
            raise InvariantError(
                f"vertex {x}: every colour of {list(lists[x])} is taken by a neighbour"
            )
    return partial


def _walk_cycle(h: Graph, start: int, first: int) -> list[int]:
    order = [start, first]
    while len(order) < h.n:
        a, b = h.adj[order[-1]]
        order.append(b if a == order[-2] else a)
    return order


def color_small_degree(h: Graph, lists: Lists) -> Outcome:
    """Exact list colouring of a connected graph with maximum degree <= 2."""
    everything = tuple(range(h.n))
    if h.n == 1:
        return Success((lists[0][0],))
    m = h.m
    short = [v for v in range(h.n) if len(lists[v]) < 2]

    if m == h.n - 1:  # path
        ends = [v for v in range(h.n) if len(h.adj[v]) == 1]
        if not short:
            start = ends[0]
        elif len(short) == 1 and short[0] in ends:
            start = short[0]
        else:
            return NotApplicable(Reason.LIST_TOO_SHORT, everything)
        order = [start]
        prev, cur = None, start
        while len(order) < h.n:
            nxt = next(y for y in h.adj[cur] if y != prev)
            order.append(nxt)
            prev, cur = cur, nxt
        partial = greedy_color_sequence(order, h, lists, [None] * h.n)
        return Success(tuple(partial))

    if short:
        return NotApplicable(Reason.LIST_TOO_SHORT, everything)
    big = next((v for v in range(h.n) if len(lists[v]) >= 3), None)
    if big is not None:
        order = _walk_cycle(h, big, h.adj[big][0])
        partial = greedy_color_sequence(order[1:] + [big], h, lists, [None] * h.n)
        return Success(tuple(partial))

    for x in range(h.n):
        for y in h.adj[x]:
            if lists[x] != lists[y]:
                partial: list[int | None] = [None] * h.n
                partial[x] = min(set(lists[x]) - set(lists[y]))
                other = next(z for z in h.adj[x] if z != y)
                order = _walk_cycle(h, x, other)
                greedy_color_sequence(order[1:], h, lists, partial)
                return Success(tuple(partial))

    a, b = lists[0]
    if h.n % 2:
        return Infeasible(f"odd cycle of length {h.n} with every list equal to {{{a}, {b}}}", everything)
    order = _walk_cycle(h, 0, h.adj[0][0])
    partial = [None] * h.n
    for i, x in enumerate(order):
        partial[x] = a if i % 2 == 0 else b
    return Success(tuple(partial))
