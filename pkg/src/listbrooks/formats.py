"""Text formats: DIMACS-style graphs, list files and colouring files.

All files use 1-based vertex ids; everything in memory is 0-based.

Graph::

    c optional comment
    p edge <n> <m>
    e <u> <v>

Lists (one line per vertex, every vertex exactly once)::

    <id> <color> [<color> ...]

Colouring::

    <id> <color>
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .graph import Graph, GraphError, build_graph


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("c"):
            yield lineno, line.split()


def parse_graph(text: str) -> Graph:
    n = None
    edges = []
    for lineno, tok in _content_lines(text):
        if tok[0] == "p":
            if n is not None:
                raise ParseError("second 'p' line", lineno)
            if len(tok) != 4 or tok[1] != "edge":
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            n, m = _ints(tok[2:], lineno)
            if n < 0 or m < 0:
                raise ParseError("negative count in 'p' line", lineno)
        elif tok[0] == "e":
            if n is None:
                raise ParseError("edge line before 'p' line", lineno)
            if len(tok) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            u, v = _ints(tok[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' line", 1)
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def emit_graph(g: Graph) -> str:
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_lists(text: str, n: int) -> list[tuple[int, ...]]:
    lists: list[tuple[int, ...] | None] = [None] * n
    for lineno, tok in _content_lines(text):
        vals = _ints(tok, lineno)
        v = vals[0]
        if not 1 <= v <= n:
            raise ParseError(f"vertex id {v} out of range 1..{n}", lineno)
        if lists[v - 1] is not None:
            raise ParseError(f"repeated line for vertex {v}", lineno)
        colors = vals[1:]
        if not colors:
            raise ParseError(f"empty list for vertex {v}", lineno)
        if min(colors) < 0:
            raise ParseError(f"negative colour for vertex {v}", lineno)
        lists[v - 1] = tuple(sorted(set(colors)))
    for v, lv in enumerate(lists):
        if lv is None:
            raise ParseError(f"missing list for vertex {v + 1}")
    return lists  # type: ignore[return-value]


def emit_lists(lists: Sequence[Iterable[int]]) -> str:
    return "".join(
        f"{v + 1} {' '.join(map(str, sorted(set(lv))))}\n" for v, lv in enumerate(lists)
    )


def parse_coloring(text: str, n: int) -> list[int | None]:
    """Colouring file to a per-vertex list; absent vertices stay ``None``."""
    f: list[int | None] = [None] * n
    seen = set()
    for lineno, tok in _content_lines(text):
        if len(tok) != 2:
            raise ParseError("expected '<id> <color>'", lineno)
        v, c = _ints(tok, lineno)
        if not 1 <= v <= n:
            raise ParseError(f"vertex id {v} out of range 1..{n}", lineno)
        if v in seen:
            raise ParseError(f"repeated line for vertex {v}", lineno)
        seen.add(v)
        f[v - 1] = c
    return f


def emit_coloring(f: Sequence[int]) -> str:
    return "".join(f"{v + 1} {c}\n" for v, c in enumerate(f))
