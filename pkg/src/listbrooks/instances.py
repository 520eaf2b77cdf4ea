"""Seeded instance generators and named fixture graphs.

Randomness comes from numpy's ``PCG64`` bit generator, seeded directly with
the caller's 64-bit seed, so a seed reproduces the same instance on any
platform running the same numpy stream version.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, build_graph

MAX_RESTARTS = 1000

NAMED_KINDS = ("cycle", "path", "complete", "petersen", "prism")


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_named(kind: str, n: int | None = None) -> Graph:
    if kind == "cycle":
        if n is None or n < 3:
            raise ValueError(f"cycle needs n >= 3, got {n}")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "path":
        if n is None or n < 1:
            raise ValueError(f"path needs n >= 1, got {n}")
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "complete":
        if n is None or n < 1:
            raise ValueError(f"complete graph needs n >= 1, got {n}")
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
        return build_graph(10, outer + spokes + inner)
    if kind == "prism":
        return build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                               (0, 3), (1, 4), (2, 5)])
    raise ValueError(f"unknown graph kind {kind!r}")


def _pair_stubs(n: int, d: int, rng: np.random.Generator) -> set[tuple[int, int]] | None:
    # Stubs that would form a loop or a repeated edge go back into the pool and
    # are re-matched; gives up (None) once no legal pair is left among them.
    edges: set[tuple[int, int]] = set()
    stubs = np.repeat(np.arange(n), d)
    while stubs.size:
        perm = rng.permutation(stubs).reshape(-1, 2)
        leftover = []
        for a, b in perm.tolist():
            if a > b:
                a, b = b, a
            if a != b and (a, b) not in edges:
                edges.add((a, b))
            else:
                leftover += (a, b)
        if leftover:
            pool = sorted(set(leftover))
            if not any((a, b) not in edges for i, a in enumerate(pool) for b in pool[i + 1:]):
                return None
        stubs = np.array(leftover, dtype=np.int64)
    return edges


def gen_random_regular(n: int, d: int, seed: int) -> Graph:
    """Simple ``d``-regular graph from the stub pairing model.

    Not necessarily connected.
    """
    if (n * d) % 2:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")
    if not 0 <= d < n:
        raise ValueError(f"need 0 <= d < n, got n={n}, d={d}")
    rng = make_rng(seed)
    for _ in range(MAX_RESTARTS):
        edges = _pair_stubs(n, d, rng)
        if edges is not None:
            return build_graph(n, sorted(edges))
    raise RuntimeError(f"no simple {d}-regular graph on {n} vertices after {MAX_RESTARTS} restarts")


def gen_random_connected(n: int, dmax: int, seed: int) -> Graph:
    """Random connected graph with maximum degree at most ``dmax``.

    A random spanning tree is grown by attaching each vertex (in shuffled
    label order) to a uniformly chosen earlier vertex that still has spare
    degree; then a random number of extra edges are tried between vertices
    with spare degree.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if dmax < 1 and n > 1:
        raise ValueError(f"dmax={dmax} cannot connect {n} vertices")
    if dmax == 1 and n > 2:
        raise ValueError(f"dmax=1 cannot connect {n} > 2 vertices")
    rng = make_rng(seed)
    labels = rng.permutation(n).tolist()
    deg = [0] * n
    nbrs: list[set[int]] = [set() for _ in range(n)]
    open_ = [labels[0]]
    where = {labels[0]: 0}

    def close(x: int) -> None:
        i = where.pop(x)
        last = open_.pop()
        if last != x:
            open_[i] = last
            where[last] = i

    def link(a: int, b: int) -> None:
        nbrs[a].add(b)
        nbrs[b].add(a)
        for x in (a, b):
            deg[x] += 1
            if deg[x] == dmax:
                close(x)

    picks = rng.random(n).tolist()
    for i in range(1, n):
        x = labels[i]
        parent = open_[int(picks[i] * len(open_))]
        where[x] = len(open_)
        open_.append(x)
        link(parent, x)

    extra = int(rng.integers(0, n * dmax // 2 + 1))
    draws = rng.random((extra, 2)).tolist()
    for r1, r2 in draws:
        if len(open_) < 2:
            break
        a = open_[int(r1 * len(open_))]
        b = open_[int(r2 * len(open_))]
        if a != b and b not in nbrs[a]:
            link(a, b)
    return build_graph(n, [(a, b) for a in range(n) for b in nbrs[a] if a < b])


def gen_lists(g: Graph, size: int, palette: int, seed: int) -> list[tuple[int, ...]]:
    """Uniform random ``size``-subsets of ``{1, ..., palette}``, one per vertex."""
    if size < 1:
        raise ValueError(f"list size must be >= 1, got {size}")
    if palette < size:
        raise ValueError(f"palette {palette} is smaller than list size {size}")
    rng = make_rng(seed)
    keys = rng.random((g.n, palette))
    chosen = np.sort(np.argsort(keys, axis=1)[:, :size], axis=1) + 1
    return [tuple(row) for row in chosen.tolist()]


def gen_block_lists(g: Graph, size: int, blocks: int, seed: int) -> list[tuple[int, ...]]:
    """Each vertex gets one of ``blocks`` disjoint runs of ``size`` colours.

    The palette is ``{1, ..., size * blocks}``. Equal and disjoint neighbouring
    lists are both common here, unlike with :func:`gen_lists`.
    """
    if size < 1 or blocks < 1:
        raise ValueError(f"need size >= 1 and blocks >= 1, got {size}, {blocks}")
    rng = make_rng(seed)
    picks = rng.integers(0, blocks, size=g.n).tolist()
    return [tuple(range(b * size + 1, (b + 1) * size + 1)) for b in picks]
