"""The acceptance battery: every checked property over fixed instance families.

Each criterion returns a :class:`CriterionResult`; hard failures make it
fail, findings (reduction divergences, conjecture candidates) are only
reported.
"""

from __future__ import annotations

import logging
import random
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Any, Optional

from .exchange import TheoremViolation, certify, exchange_step_edge
from .families import (exhaustive_family, even_degree_family, iter_partitions, named,
                       random_family)
from .graph import Multigraph, TerminalPartition
from .greedy import greedy_optimize
from .jump import FiniteJumpSystem, check_two_step_axiom, steps_toward
from .packing import enumerate_feasible, feasible_box, member_via_reduction, realize
from .paths import EDGE, VERTEX, demand_of, is_valid_system
from .polytope import (check_bisubmodular, enumerate_vertices, fmt, integer_points,
                       intersect_and_check, is_jump_on_integer_points, parity_feasibility_check,
                       polytope_member, reduced_inequalities, relaxed_feasible,
                       support_pair_function)

__all__ = ["CRITERIA", "PRESETS", "CriterionResult", "Family", "family", "run_suite"]

log = logging.getLogger(__name__)

INSTANCE_SEED = 0
POINT_SEED = 0
MAX_LISTED = 5


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool = True
    checked: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    findings: list[dict[str, Any]] = field(default_factory=list)
    finding_count: int = 0
    elapsed: float = 0.0
    detail: dict[str, Any] = field(default_factory=dict)

    def fail(self, record: dict[str, Any]) -> None:
        self.ok = False
        if len(self.failures) < MAX_LISTED:
            self.failures.append(record)

    def find(self, record: dict[str, Any]) -> None:
        self.finding_count += 1
        if len(self.findings) < MAX_LISTED:
            self.findings.append(record)

    def line(self) -> str:
        extra = f", {self.finding_count} findings" if self.finding_count else ""
        return (f"criterion {self.number:2d} {'PASS' if self.ok else 'FAIL'}: {self.title} "
                f"({self.checked} checks{extra}, {self.elapsed:.1f}s)")

    def to_dict(self, *, timing: bool = True) -> dict[str, Any]:
        out = {
            "criterion": self.number, "title": self.title, "ok": self.ok,
            "checked": self.checked, "failures": self.failures,
            "finding_count": self.finding_count, "findings": self.findings,
        }
        out.update(self.detail)
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


@dataclass(frozen=True)
class Family:
    """Instance lists for the criteria of one preset."""

    name: str
    graphs: tuple[Multigraph, ...]
    exchange: tuple[Multigraph, ...]
    even: tuple[Multigraph, ...]


def _named(*names: str) -> tuple[Multigraph, ...]:
    return tuple(named(n) for n in names)


def _acceptance() -> Family:
    graphs = exhaustive_family(6) + tuple(random_family(200, seed=INSTANCE_SEED))
    exch = _named("star", "triangle") + tuple(random_family(50, seed=INSTANCE_SEED + 1))
    even = tuple(even_degree_family()) + tuple(
        random_family(20, seed=INSTANCE_SEED + 2, even=True, max_vertices=8))
    return Family("acceptance", graphs, exch, even)


def _quick() -> Family:
    graphs = exhaustive_family(4) + tuple(random_family(20, seed=INSTANCE_SEED))
    exch = _named("star", "triangle") + tuple(random_family(5, seed=INSTANCE_SEED + 1))
    return Family("quick", graphs, exch, tuple(even_degree_family()))


def _named_preset() -> Family:
    from .families import NAMED

    graphs = tuple(named(n) for n in NAMED)
    return Family("named", graphs, _named("star", "triangle"), tuple(even_degree_family()))


PRESETS: dict[str, Callable[[], Family]] = {
    "acceptance": _acceptance,
    "quick": _quick,
    "named": _named_preset,
}


@lru_cache(maxsize=None)
def family(preset: str) -> Family:
    if preset not in PRESETS:
        raise KeyError(f"unknown family preset {preset!r}; choose from {sorted(PRESETS)}")
    return PRESETS[preset]()


@lru_cache(maxsize=20000)
def _feasible(g: Multigraph, mode: str) -> FiniteJumpSystem:
    return enumerate_feasible(g, mode)


def _partitions(g: Multigraph) -> list[tuple[str, TerminalPartition]]:
    return list(iter_partitions(g))


# criteria 1 and 2


def jump_axiom(fam: Family, mode: str, number: int) -> CriterionResult:
    res = CriterionResult(number, f"two-step axiom for feasible vectors, {mode} mode")
    for g in fam.graphs:
        J = _feasible(g, mode)
        v = check_two_step_axiom(J)
        res.checked += 1
        if not v.ok:
            res.fail({"instance": g.to_dict(), "counterexample": v.counterexample})
    return res


# criterion 3


def exchange_soundness(fam: Family) -> CriterionResult:
    res = CriterionResult(3, "constructive exchange is certified and its induction decreases")
    max_trace = 0
    for g in fam.exchange:
        J = _feasible(g, EDGE)
        systems = {m: realize(g, EDGE, m) for m in J}
        for m1, m2 in product(sorted(J), repeat=2):
            for sigma in steps_toward(m1, m2):
                res.checked += 1
                rec = {"instance": g.digest(), "m1": list(m1), "m2": list(m2),
                       "step": sigma.label(g.terminals)}
                try:
                    out = exchange_step_edge(g, systems[m1], systems[m2], sigma)
                except (TheoremViolation, AssertionError) as exc:
                    res.fail({**rec, "error": str(exc).splitlines()[0]})
                    continue
                v = certify(g, m1, m2, sigma, out)
                if not v.ok:
                    res.fail({**rec, "reason": v.reason})
                max_trace = max(max_trace, len(out.trace))
    res.detail["max_trace"] = max_trace
    return res


# criteria 4, 7, 8


def _random_points(rng: random.Random, verts: Sequence[tuple[Fraction, ...]], count: int
                   ) -> list[tuple[Fraction, ...]]:
    """Rational points: half uniform in the bounding box, half near segments between vertices."""
    n = len(verts[0])
    caps = [max(v[i] for v in verts) for i in range(n)]
    pts = []
    for k in range(count):
        if k % 2 == 0:
            d = rng.randint(1, 6)
            pts.append(tuple(Fraction(rng.randint(0, int(c * d)), d) for c in caps))
            continue
        a, b = rng.choice(verts), rng.choice(verts)
        lam = Fraction(rng.randint(0, 6), 6)
        x = [lam * p + (1 - lam) * q for p, q in zip(a, b)]
        if rng.random() < 0.5:
            i = rng.randrange(n)
            x[i] = max(Fraction(0), x[i] + Fraction(rng.choice((-1, 1)), 6))
        pts.append(tuple(x))
    return pts


def polytope_description(fam: Family, points: int = 100) -> CriterionResult:
    res = CriterionResult(4, "polytope vertices integral, integer points a jump system, "
                             "membership equals fractional realizability")
    for gi, g in enumerate(fam.graphs):
        for pname, part in _partitions(g):
            S = reduced_inequalities(g, part)
            verts = enumerate_vertices(S)
            rec = {"instance": g.digest(), "partition": pname}
            res.checked += 1
            frac = [v for v in verts if any(c.denominator != 1 for c in v)]
            if frac:
                res.fail({**rec, "fractional_vertex": [fmt(c) for c in frac[0]]})
            v = is_jump_on_integer_points(S)
            if not v.ok:
                res.fail({**rec, "jump_counterexample": v.counterexample})
            rng = random.Random(f"{POINT_SEED}:{gi}:{pname}")
            for x in list(verts) + _random_points(rng, verts, points):
                res.checked += 1
                inside = polytope_member(S, x)
                if inside != relaxed_feasible(g, part, x):
                    res.fail({**rec, "point": [fmt(c) for c in x], "member": inside})
    return res


def bisubmodularity(fam: Family) -> CriterionResult:
    res = CriterionResult(7, "support function of the polytope is bisubmodular")
    for g in fam.graphs:
        for pname, part in _partitions(g):
            res.checked += 1
            v = check_bisubmodular(support_pair_function(reduced_inequalities(g, part)))
            if not v.ok:
                res.fail({"instance": g.digest(), "partition": pname,
                          "violation": v.counterexample})
    return res


def parity_feasibility(fam: Family) -> CriterionResult:
    res = CriterionResult(8, "integer points meeting the parity condition are realizable")
    points = 0
    for g in fam.graphs:
        for pname, part in _partitions(g):
            res.checked += 1
            v = parity_feasibility_check(g, part)
            points += v.detail.get("checked", 0)
            if not v.ok:
                res.fail({"instance": g.to_dict(), "partition": pname, **v.counterexample})
    res.detail["points_realized"] = points
    return res


# criterion 5


def star_strictness() -> CriterionResult:
    res = CriterionResult(5, "star: (1,1,1) lies in the polytope but is not feasible")
    g = named("star")
    x = (1, 1, 1)
    S = reduced_inequalities(g)
    res.checked = 2
    if not polytope_member(S, x):
        res.fail({"reason": "(1,1,1) not in the polytope"})
    if x in _feasible(g, EDGE):
        res.fail({"reason": "(1,1,1) is feasible"})
    return res


# criterion 6


def _all_partitions(g: Multigraph) -> list[tuple[str, TerminalPartition]]:
    out = _partitions(g)
    seen = {p for _, p in out}
    for name in sorted(g.partitions):
        p = g.partition(name)
        if p not in seen:
            seen.add(p)
            out.append((name, p))
    return out


def intersections(fam: Family) -> CriterionResult:
    res = CriterionResult(6, "even-degree intersections: integral vertices, feasible maximizer")
    for g in fam.even:
        for (n1, p1), (n2, p2) in combinations_with_replacement(_all_partitions(g), 2):
            res.checked += 1
            rep = intersect_and_check(g, p1, p2)
            rec = {"instance": g.digest(), "partitions": [n1, n2]}
            if not rep.ok:
                res.fail({**rec, **rep.to_dict()})
            for v in rep.infeasible_vertices:
                res.find({**rec, "vertex": [fmt(c) for c in v]})
    return res


# criterion 9


def greedy_optimality(fam: Family, seed: int = 0, weights: int = 50) -> CriterionResult:
    res = CriterionResult(9, "greedy attains the maximum of random linear objectives")
    rng = random.Random(seed)
    for g in fam.graphs:
        n = len(g.terminals)
        for mode in (EDGE, VERTEX):
            J = _feasible(g, mode)
            for _ in range(weights):
                w = tuple(rng.randint(-5, 5) for _ in range(n))
                m, value = greedy_optimize(J, w)
                best = max(sum(a * b for a, b in zip(w, v)) for v in J)
                res.checked += 1
                if value != best or m not in J:
                    res.fail({"instance": g.digest(), "mode": mode, "weights": list(w),
                              "greedy": [list(m), value], "max": best})
    return res


# criterion 10


def reduction_agreement(fam: Family) -> CriterionResult:
    res = CriterionResult(10, "realizations are valid; terminal-copy reduction compared")
    by_mode = {EDGE: 0, VERTEX: 0}
    for g in fam.graphs:
        for mode in (EDGE, VERTEX):
            box = feasible_box(g, mode)
            for m in product(*(range(b + 1) for b in box)):
                if sum(m) % 2:
                    continue
                res.checked += 1
                w = realize(g, mode, m)
                rec = {"instance": g.digest(), "mode": mode, "m": list(m)}
                if w is not None:
                    v = is_valid_system(g, w)
                    if not v.ok or w.mode != mode or demand_of(w, g.terminals) != m:
                        res.fail({**rec, "reason": v.reason or "wrong demand or mode"})
                reduced = member_via_reduction(g, mode, m)
                if reduced != (w is not None):
                    log.info("reduction divergence %s", rec)
                    res.find({**rec, "search": w is not None, "reduction": reduced})
                    by_mode[mode] += 1
    res.detail["divergences_by_mode"] = by_mode
    return res


CRITERIA: dict[int, Callable[..., CriterionResult]] = {
    1: lambda fam, seed: jump_axiom(fam, EDGE, 1),
    2: lambda fam, seed: jump_axiom(fam, VERTEX, 2),
    3: lambda fam, seed: exchange_soundness(fam),
    4: lambda fam, seed: polytope_description(fam),
    5: lambda fam, seed: star_strictness(),
    6: lambda fam, seed: intersections(fam),
    7: lambda fam, seed: bisubmodularity(fam),
    8: lambda fam, seed: parity_feasibility(fam),
    9: lambda fam, seed: greedy_optimality(fam, seed),
    10: lambda fam, seed: reduction_agreement(fam),
}


def run_criterion(number: int, preset: str = "acceptance", seed: int = 0) -> CriterionResult:
    fam = family(preset)
    t0 = time.perf_counter()
    res = CRITERIA[number](fam, seed)
    res.elapsed = time.perf_counter() - t0
    return res


def run_suite(preset: str = "acceptance", seed: int = 0,
              criteria: Optional[Sequence[int]] = None,
              progress: Optional[Callable[[CriterionResult], None]] = None
              ) -> list[CriterionResult]:
    out = []
    for number in criteria or sorted(CRITERIA):
        res = run_criterion(number, preset, seed)
        if progress:
            progress(res)
        out.append(res)
    return out
