"""Command-line front end.

Exit codes: 0 success, 1 usage or I/O error, 2 infeasible (or verifier
violations), 3 not applicable (or oracle limit), 4 internal invariant
failure. When something goes wrong the first line on stderr is
``status=<word>``.
"""

from __future__ import annotations

import argparse
import sys

from . import formats
from .checking import DEFAULT_NODE_LIMIT, SearchLimitExceeded, solve_exact, verify_coloring
from .chooser import Infeasible, InvariantError, NotApplicable, Success, list_color
from .fuzz import run_fuzz
from .instances import NAMED_KINDS, gen_lists, gen_named, gen_random_connected, gen_random_regular

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2
EXIT_NOT_APPLICABLE = 3
EXIT_INTERNAL = 4


def _status(word: str, *lines: str) -> None:
    print(f"status={word}", file=sys.stderr)
    for line in lines:
        print(line, file=sys.stderr)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_color(args: argparse.Namespace) -> int:
    g = formats.parse_graph(_read(args.graph))
    lists = formats.parse_lists(_read(args.lists), g.n)
    try:
        outcome, counters = list_color(g, lists)
    except InvariantError as exc:
        _status("internal-error", str(exc))
        return EXIT_INTERNAL
    trace = [f"{k}={v}" for k, v in counters.as_dict().items()] if args.trace else []
    if isinstance(outcome, Success):
        sys.stdout.write(formats.emit_coloring(outcome.coloring))
        if trace:
            _status("success", *trace)
        return EXIT_OK
    comp = " ".join(str(v + 1) for v in outcome.component)
    if isinstance(outcome, Infeasible):
        _status("infeasible", outcome.witness, f"component: {comp}", *trace)
        return EXIT_INFEASIBLE
    assert isinstance(outcome, NotApplicable)
    _status("not-applicable", f"reason={outcome.reason.value}", f"component: {comp}", *trace)
    return EXIT_NOT_APPLICABLE


def cmd_verify(args: argparse.Namespace) -> int:
    g = formats.parse_graph(_read(args.graph))
    lists = formats.parse_lists(_read(args.lists), g.n)
    f = formats.parse_coloring(_read(args.coloring), g.n)
    bad = verify_coloring(g, lists, f)
    if not bad:
        print("ok")
        return EXIT_OK
    # report ids 1-based, like the files
    for viol in bad:
        vs = " ".join(str(v + 1) for v in viol.vertices)
        cs = " ".join(map(str, viol.colors))
        print(f"{viol.kind} {vs}" + (f" color {cs}" if cs else ""))
    _status("violations", f"count={len(bad)}")
    return EXIT_INFEASIBLE


def cmd_oracle(args: argparse.Namespace) -> int:
    g = formats.parse_graph(_read(args.graph))
    lists = formats.parse_lists(_read(args.lists), g.n)
    try:
        sol = solve_exact(g, lists, args.node_limit)
    except SearchLimitExceeded as exc:
        _status("limit-exceeded", str(exc))
        return EXIT_NOT_APPLICABLE
    if sol is None:
        _status("infeasible", "exhaustive search found no list colouring")
        return EXIT_INFEASIBLE
    sys.stdout.write(formats.emit_coloring(sol))
    return EXIT_OK


def cmd_gen_graph(args: argparse.Namespace) -> int:
    if args.kind == "regular":
        if args.n is None or args.d is None:
            raise ValueError("--kind regular needs --n and --d")
        g = gen_random_regular(args.n, args.d, args.seed)
    elif args.kind == "connected":
        if args.n is None or args.dmax is None:
            raise ValueError("--kind connected needs --n and --dmax")
        g = gen_random_connected(args.n, args.dmax, args.seed)
    else:
        g = gen_named(args.kind, args.n)
    _write(formats.emit_graph(g), args.out)
    return EXIT_OK


def cmd_gen_lists(args: argparse.Namespace) -> int:
    g = formats.parse_graph(_read(args.graph))
    _write(formats.emit_lists(gen_lists(g, args.size, args.palette, args.seed)), args.out)
    return EXIT_OK


def cmd_fuzz(args: argparse.Namespace) -> int:
    report = run_fuzz(args.trials, args.seed, args.nmax, args.oracle_nmax, fail_fast=args.fail_fast)
    print("\n".join(report.lines()))
    if report.ok:
        return EXIT_OK
    lines = [f"failure {f}" for f in report.failures[:20]]
    lines += [f"uncovered={k}" for k in report.uncovered()]
    _status("fuzz-failed", *lines)
    return EXIT_INTERNAL


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        _status("error", f"{self.prog}: {message}")
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="listbrooks", description="List colouring from Delta-element lists.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("color", help="colour a graph from its lists")
    c.add_argument("graph")
    c.add_argument("lists")
    c.add_argument("--trace", action="store_true", help="print branch counters to stderr")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a colouring file")
    v.add_argument("graph")
    v.add_argument("lists")
    v.add_argument("coloring")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive search (small graphs)")
    o.add_argument("graph")
    o.add_argument("lists")
    o.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    o.set_defaults(func=cmd_oracle)

    gen = sub.add_parser("gen", help="generate graphs or lists").add_subparsers(dest="what", required=True)
    gg = gen.add_parser("graph")
    gg.add_argument("--kind", required=True, choices=[*NAMED_KINDS, "regular", "connected"])
    gg.add_argument("--n", type=int)
    gg.add_argument("--d", type=int)
    gg.add_argument("--dmax", type=int)
    gg.add_argument("--seed", type=int, default=0)
    gg.add_argument("--out")
    gg.set_defaults(func=cmd_gen_graph)
    gl = gen.add_parser("lists")
    gl.add_argument("--graph", required=True)
    gl.add_argument("--size", type=int, required=True)
    gl.add_argument("--palette", type=int, required=True)
    gl.add_argument("--seed", type=int, default=0)
    gl.add_argument("--out")
    gl.set_defaults(func=cmd_gen_lists)

    f = sub.add_parser("fuzz", help="randomised conformance run")
    f.add_argument("--trials", type=int, required=True)
    f.add_argument("--seed", type=int, required=True)
    f.add_argument("--nmax", type=int, default=60)
    f.add_argument("--oracle-nmax", type=int, default=9)
    f.add_argument("--fail-fast", action="store_true")
    f.set_defaults(func=cmd_fuzz)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        _status("error", str(exc))
        return EXIT_ERROR
    except InvariantError as exc:
        _status("internal-error", str(exc))
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
