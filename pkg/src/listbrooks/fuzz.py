"""Randomised conformance harness for the chooser.

Trial ``i`` of a run with seed ``s`` draws everything from
``numpy.random.default_rng([s, i])``, so any failing trial can be rebuilt on
its own with :func:`make_trial`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .checking import solve_exact, verify_coloring
from .chooser import (
    Infeasible,
    NotApplicable,
    Reason,
    Success,
    TraceCounters,
    list_color,
)
from .graph import Graph, induced_subgraph, is_complete, max_degree, connected_components
from .instances import gen_block_lists, gen_lists, gen_random_connected, gen_random_regular

SMALL_FRACTION = 0.5
# share of trials whose lists are two disjoint colour blocks (palette 2*size)
BLOCK_FRACTION = 0.25


@dataclass(frozen=True)
class Trial:
    index: int
    kind: str
    graph: Graph
    lists: list[tuple[int, ...]]


@dataclass
class TrialFailure:
    seed: int
    trial: int
    message: str

    def __str__(self) -> str:
        return f"seed={self.seed} trial={self.trial}: {self.message}"


@dataclass
class FuzzReport:
    seed: int
    trials: int
    counters: TraceCounters = field(default_factory=TraceCounters)
    outcomes: Counter = field(default_factory=Counter)
    oracle_checked: int = 0
    oracle_checked_small_degree: int = 0
    failures: list[TrialFailure] = field(default_factory=list)

    def uncovered(self) -> list[str]:
        return [k for k, v in self.counters.as_dict().items() if v < 1]

    @property
    def ok(self) -> bool:
        return not self.failures and not self.uncovered()

    def lines(self) -> list[str]:
        out = [f"trials={self.trials}", f"seed={self.seed}"]
        out += [f"outcome_{k}={self.outcomes[k]}" for k in ("success", "infeasible", "not_applicable")]
        out += [f"oracle_checked={self.oracle_checked}",
                f"oracle_checked_small_degree={self.oracle_checked_small_degree}"]
        out += [f"{k}={v}" for k, v in self.counters.as_dict().items()]
        out.append(f"failures={len(self.failures)}")
        return out


def make_trial(seed: int, index: int, nmax: int = 60, oracle_nmax: int = 9) -> Trial:
    rng = np.random.default_rng([seed, index])
    upper = min(nmax, oracle_nmax) if rng.random() < SMALL_FRACTION else nmax
    upper = max(upper, 1)
    sub_seed = int(rng.integers(2**63))
    if rng.random() < 0.5 and upper >= 4:
        d = int(rng.integers(3, min(6, upper - 1) + 1))
        n = int(rng.integers(d + 1, upper + 1))
        if (n * d) % 2:
            n = n + 1 if n < upper else n - 1
        kind = f"regular(n={n},d={d})"
        g = gen_random_regular(n, d, sub_seed)
    else:
        dmax = int(rng.integers(1, 7))
        n = int(rng.integers(1, min(upper, 2) + 1)) if dmax == 1 else int(rng.integers(1, upper + 1))
        kind = f"connected(n={n},dmax={dmax})"
        g = gen_random_connected(n, dmax, sub_seed)
    size = max(max_degree(g), 2)
    list_seed = int(rng.integers(2**63))
    if rng.random() < BLOCK_FRACTION:
        lists = gen_block_lists(g, size, 2, list_seed)
        return Trial(index, f"{kind} size={size} blocks=2", g, lists)
    palette = int(rng.integers(size, 2 * size + 1))
    lists = gen_lists(g, size, palette, list_seed)
    return Trial(index, f"{kind} size={size} palette={palette}", g, lists)


def _gate_is_legitimate(g: Graph, lists, outcome: NotApplicable) -> bool:
    h, ids = induced_subgraph(g, outcome.component)
    d = max_degree(h)
    sizes = [len(set(lists[v])) for v in ids]
    if outcome.reason is Reason.COMPLETE_COMPONENT:
        return d >= 3 and h.n == d + 1 and is_complete(h, range(h.n)) and min(sizes) <= d
    if d >= 3:
        return min(sizes) < d
    return min(sizes) < 2


def _is_odd_cycle_with_equal_pairs(g: Graph, lists, comp) -> bool:
    h, ids = induced_subgraph(g, comp)
    if h.n < 3 or h.n % 2 == 0 or any(len(a) != 2 for a in h.adj):
        return False
    if len(connected_components(h)) != 1:
        return False
    distinct = {frozenset(lists[v]) for v in ids}
    return len(distinct) == 1 and len(distinct.pop()) == 2


def check_trial(g: Graph, lists, oracle_nmax: int, report: FuzzReport) -> str | None:
    """Run and cross-check one instance; returns a failure message or None."""
    outcome, counters = list_color(g, lists)
    report.counters.add(counters)

    if isinstance(outcome, Success):
        report.outcomes["success"] += 1
        bad = verify_coloring(g, lists, outcome.coloring)
        if bad:
            return "verifier: " + ", ".join(map(str, bad[:5]))
    elif isinstance(outcome, Infeasible):
        report.outcomes["infeasible"] += 1
        if not _is_odd_cycle_with_equal_pairs(g, lists, outcome.component):
            return f"infeasible verdict on a component that is not an odd cycle with equal 2-lists: {outcome}"
    else:
        report.outcomes["not_applicable"] += 1
        if not _gate_is_legitimate(g, lists, outcome):
            return f"unjustified not-applicable verdict: {outcome}"

    if g.n <= oracle_nmax:
        report.oracle_checked += 1
        if max_degree(g) <= 2:
            report.oracle_checked_small_degree += 1
        sol = solve_exact(g, lists)
        if isinstance(outcome, Success) and sol is None:
            return "oracle reports infeasible but chooser succeeded"
        if isinstance(outcome, Infeasible) and sol is not None:
            return f"chooser reports infeasible but oracle found {sol}"
        if sol is not None and verify_coloring(g, lists, sol):
            return "oracle colouring fails the verifier"
    return None


def run_fuzz(trials: int, seed: int, nmax: int = 60, oracle_nmax: int = 9,
             fail_fast: bool = False) -> FuzzReport:
    report = FuzzReport(seed=seed, trials=trials)
    for i in range(trials):
        try:
            trial = make_trial(seed, i, nmax, oracle_nmax)
            msg = check_trial(trial.graph, trial.lists, oracle_nmax, report)
        except Exception as exc:  # any crash is a failed trial, not a harness crash
            msg = f"{type(exc).__name__}: {exc}"
        if msg is not None:
            report.failures.append(TrialFailure(seed, i, msg))
            if fail_fast:
                report.trials = i + 1
                break
    return report
