"""Evaluate registry inequalities on graphs and hunt for counterexamples.

Tolerance policy. When both sides are exact (int or Fraction) the slack is
exact and equality means slack == 0. Otherwise a check is violated when
``slack < -1e-9 * max(1, |rhs|)`` and reports equality when
``|slack| <= 1e-6 * max(1, |rhs|)``. Slack is signed so that a positive value
means the inequality holds with room to spare.

Hunts screen every labeled graph with the vectorised invariants in
:mod:`irreg.batch` and re-evaluate anything that is not clearly satisfied
with the exact per-graph path, which alone decides what is reported.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

import numpy as np

from .batch import BATCH_CAP, BatchInvariants
from .errors import IrregError
from .graph import Graph, encode_graph6, parse_graph6
from .invariants import GraphInvariants
from .registry import GE, InequalityCheck, get_check, registry

VIOLATION_RTOL = 1e-9
EQUALITY_RTOL = 1e-6
# batch screen: anything below this (relative) slack is re-checked exactly
SCREEN_RTOL = 5e-10
CHUNK = 1 << 15

HOLDS = "holds"
EQUALITY = "equality"
VIOLATED = "violated"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str
    lhs_value: Any = None
    rhs_value: Any = None
    slack: Any = None
    regime: str | None = None  # "exact" or "float"
    reason: str | None = None

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "status": self.status,
            "lhs": render_number(self.lhs_value),
            "rhs": render_number(self.rhs_value),
            "slack": render_number(self.slack),
            "regime": self.regime,
            "reason": self.reason,
        }


@dataclass
class HuntReport:
    check_id: str
    universe: dict
    graphs_examined: int = 0
    violations: list[tuple[str, CheckResult]] = field(default_factory=list)
    kind: str = "theorem"
    expect_violations: bool = False
    screened_candidates: int = 0
    truncated: bool = False

    @property
    def as_expected(self) -> bool:
        return bool(self.violations) == self.expect_violations

    def to_json(self) -> dict:
        out = {
            "check_id": self.check_id,
            "kind": self.kind,
            "expect_violations": self.expect_violations,
            "universe": self.universe,
            "graphs_examined": self.graphs_examined,
            "screened_candidates": self.screened_candidates,
            "violation_count": len(self.violations),
            "truncated": self.truncated,
            "violations": [{"graph6": g6, **res.to_json()} for g6, res in self.violations],
        }
        if self.kind == "conjecture":
            out["note"] = "exhaustive search over a finite universe; evidence, not proof"
        return out


def render_number(x):
    """Stable JSON rendering: Fractions as "p/q", floats with 12 significant digits."""
    if x is None:
        return None
    if isinstance(x, bool):
        return x
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (int, np.integer)):
        return int(x)
    return float(f"{float(x):.12g}")


def _exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def classify(lhs, rhs, direction: str) -> tuple[Any, str, str]:
    """(slack, status, regime) for one evaluated inequality."""
    slack = lhs - rhs if direction == GE else rhs - lhs
    if _exact(lhs) and _exact(rhs):
        status = HOLDS if slack > 0 else EQUALITY if slack == 0 else VIOLATED
        return slack, status, "exact"
    slack = float(slack)
    scale = max(1.0, abs(float(rhs)))
    if not slack >= -VIOLATION_RTOL * scale:
        status = VIOLATED
    elif abs(slack) <= EQUALITY_RTOL * scale:
        status = EQUALITY
    else:
        status = HOLDS
    return slack, status, "float"


def _as_invariants(g) -> GraphInvariants:
    return g if isinstance(g, GraphInvariants) else GraphInvariants(g)


def evaluate_check(check: InequalityCheck | str, g: Graph | GraphInvariants) -> CheckResult:
    if isinstance(check, str):
        check = get_check(check)
    inv = _as_invariants(g)
    try:
        if not check.applies(inv):
            return CheckResult(check.id, NOT_APPLICABLE, reason=f"requires {check.condition}")
        lhs, rhs = check.sides(inv)
    except (IrregError, ZeroDivisionError, ValueError, OverflowError) as exc:
        return CheckResult(check.id, NOT_APPLICABLE, reason=f"{type(exc).__name__}: {exc}")
    slack, status, regime = classify(lhs, rhs, check.direction)
    return CheckResult(check.id, status, lhs, rhs, slack, regime)


def verify_all(g: Graph | GraphInvariants) -> list[CheckResult]:
    inv = _as_invariants(g)
    return [evaluate_check(c, inv) for c in registry()]


def unexpected_violations(results: Iterable[CheckResult]) -> list[CheckResult]:
    return [r for r in results
            if r.status == VIOLATED and not get_check(r.check_id).expect_violations]


# batch screening ----------------------------------------------------------

def screen(check: InequalityCheck, binv: BatchInvariants) -> np.ndarray:
    """Indices of graphs in ``binv`` that are not clearly satisfied."""
    with np.errstate(all="ignore"):
        app = np.broadcast_to(np.asarray(check.applies(binv), dtype=bool), (binv.N,))
        if not app.any():
            return np.zeros(0, dtype=np.int64)
        lhs, rhs = check.sides(binv)
        lhs = np.broadcast_to(np.asarray(lhs, dtype=float), (binv.N,))
        rhs = np.broadcast_to(np.asarray(rhs, dtype=float), (binv.N,))
        slack = lhs - rhs if check.direction == GE else rhs - lhs
        scale = np.maximum(1.0, np.abs(rhs))
        clear = slack >= -SCREEN_RTOL * scale
    return np.flatnonzero(app & ~clear)


def _filters_key(connected: bool) -> list[str]:
    return ["m >= 1"] + (["connected"] if connected else [])


def _hunt_chunk(args):
    n, start, stop, check_ids, connected, limit = args
    checks = [get_check(c) for c in check_ids]
    binv = BatchInvariants(n, np.arange(start, stop, dtype=np.int64))
    keep = binv.m >= 1
    if connected:
        keep &= binv.connected
    binv = binv.subset(keep)
    found: dict[str, tuple[int, list, bool]] = {}
    cache: dict[int, GraphInvariants] = {}
    for check in checks:
        cand = screen(check, binv) if binv.N else ()
        confirmed = []
        stopped = False
        for pos, k in enumerate(cand):
            if limit is not None and len(confirmed) >= limit:
                stopped = pos < len(cand)
                break
            mask = int(binv.masks[k])
            inv = cache.get(mask)
            if inv is None:
                inv = cache[mask] = GraphInvariants(Graph.from_edge_mask(n, mask))
            res = evaluate_check(check, inv)
            if res.status == VIOLATED:
                confirmed.append((encode_graph6(inv.g), res))
        found[check.id] = (len(cand), confirmed, stopped)
    return binv.N, found


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("IRREG_THREADS", "1")))
    except ValueError:
        return 1


def hunt_many(check_ids: Sequence[str], n_max: int, connected: bool = False,
              n_min: int = 1, workers: int | None = None,
              max_violations: int | None = None) -> dict[str, HuntReport]:
    """One enumeration pass over labeled graphs on n_min..n_max vertices, many checks.

    ``max_violations`` caps how many confirmed violations are kept per check;
    once reached, remaining screen candidates are left unconfirmed and the
    report is marked truncated.
    """
    checks = [get_check(c) for c in check_ids]
    if not 1 <= n_min <= n_max <= BATCH_CAP:
        raise ValueError(f"hunts need 1 <= n_min <= n_max <= {BATCH_CAP}")
    universe = {"n_min": n_min, "n_max": n_max, "labeled": True, "filters": _filters_key(connected)}
    reports = {c.id: HuntReport(c.id, dict(universe), kind=c.kind,
                                expect_violations=c.expect_violations) for c in checks}
    ids = tuple(c.id for c in checks)
    jobs = []
    for n in range(n_min, n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        for start in range(0, total, CHUNK):
            jobs.append((n, start, min(total, start + CHUNK), ids, connected, max_violations))
    workers = workers or _workers()
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_hunt_chunk, jobs))
    else:
        results = [_hunt_chunk(job) for job in jobs]
    # jobs are in (n, mask) order and so are the violations inside each chunk
    for examined, found in results:
        for cid, (ncand, confirmed, stopped) in found.items():
            rep = reports[cid]
            rep.graphs_examined += examined
            rep.screened_candidates += ncand
            room = None if max_violations is None else max_violations - len(rep.violations)
            if room is not None and len(confirmed) > room:
                confirmed = confirmed[:room]
                stopped = True
            rep.violations.extend(confirmed)
            rep.truncated |= stopped
    return reports


def hunt(check_id: str, n_max: int, connected: bool = False, n_min: int = 1,
         workers: int | None = None, max_violations: int | None = None) -> HuntReport:
    cid = get_check(check_id).id
    return hunt_many([cid], n_max, connected, n_min, workers, max_violations)[cid]


def hunt_exact(check_id: str, n_max: int, connected: bool = False, n_min: int = 1) -> HuntReport:
    """Slow reference hunt: the exact per-graph path on every labeled graph."""
    check = get_check(check_id)
    universe = {"n_min": n_min, "n_max": n_max, "labeled": True, "filters": _filters_key(connected)}
    report = HuntReport(check.id, universe, kind=check.kind, expect_violations=check.expect_violations)
    for n in range(n_min, n_max + 1):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = Graph.from_edge_mask(n, mask)
            if g.m == 0 or (connected and not g.is_connected()):
                continue
            report.graphs_examined += 1
            res = evaluate_check(check, g)
            if res.status == VIOLATED:
                report.violations.append((encode_graph6(g), res))
    return report


def reverify(report: HuntReport) -> bool:
    """Re-parse every reported graph6 string and confirm the violation."""
    for g6, _ in report.violations:
        if evaluate_check(report.check_id, parse_graph6(g6)).status != VIOLATED:
            return False
    return True


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=False)
