"""Constructive two-step exchange for edge-disjoint T-path systems.

Given systems realizing ``m1`` and ``m2`` and a first step from ``m1``
toward ``m2``, :func:`exchange_step_edge` produces a second step together
with an explicit system realizing the resulting vector.  It follows the
induction on the number of edge-transitions of the first system that the
second one does not use: deleting a path, adding a path of the second
system, swapping one in, or rerouting a path of the first system along a
path of the second.  Every recursive call must strictly decrease that
number; this is asserted.

Rerouting can produce a trail (an edge-simple walk that revisits a
non-terminal vertex).  Trails are kept as they are during the recursion and
shortcut to simple paths only in the returned witness, which preserves the
endpoints and edge-disjointness.

:func:`exchange_step_generic` answers the same question for either mode by
calling the exact realization search.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any, NamedTuple, Optional

from .graph import DemandLike, Multigraph
from .jump import Step, steps_toward
from .packing import realize
from .paths import (
    EDGE,
    PartitionArg,
    PathSystem,
    TPath,
    Validity,
    demand_of,
    is_valid_system,
    route_transitions,
)

__all__ = [
    "ExchangeError",
    "ExchangeResult",
    "TheoremViolation",
    "certify",
    "exchange_step_edge",
    "exchange_step_generic",
]

FIRST = "first-step-feasible"
SECOND = "second-step"


class ExchangeError(ValueError):
    """Invalid input to an exchange (illegal step, invalid or infeasible systems)."""


class TheoremViolation(AssertionError):
    """No second step exists although the jump property promises one."""

    def __init__(self, message: str, instance: dict[str, Any]) -> None:
        super().__init__(message + "\n" + json.dumps(instance, sort_keys=True))
        self.instance = instance


@dataclass(frozen=True)
class ExchangeResult:
    outcome: str
    vector: tuple[int, ...]
    system: PathSystem
    step: Optional[Step] = None
    trace: tuple[dict[str, Any], ...] = field(default=(), compare=False)

    def to_dict(self, ground: Sequence[str]) -> dict[str, Any]:
        out: dict[str, Any] = {
            "outcome": self.outcome,
            "vector": dict(zip(ground, self.vector)),
            "witness": self.system.to_dict(),
        }
        if self.step is not None:
            out["step"] = self.step.label(ground)
        if self.trace:
            out["trace"] = list(self.trace)
        return out


class _Route(NamedTuple):
    vertices: tuple[str, ...]
    edges: tuple[int, ...]

    @property
    def ends(self) -> tuple[str, str]:
        return self.vertices[0], self.vertices[-1]

    def other(self, t: str) -> str:
        a, b = self.ends
        return b if t == a else a

    def from_end(self, t: str) -> "_Route":
        if self.vertices[0] == t:
            return self
        return _Route(self.vertices[::-1], self.edges[::-1])

    def end_edge(self, t: str) -> int:
        return self.from_end(t).edges[0]

    def key(self) -> tuple:
        r = self if self.vertices[0] <= self.vertices[-1] else self.from_end(self.vertices[-1])
        return (r.edges, r.vertices)

    def label(self) -> str:
        return "-".join(self.vertices)


def _transitions(system: Sequence[_Route]) -> set:
    out: set = set()
    for r in system:
        out.update(route_transitions(r.vertices, r.edges))
    return out


def _demand(system: Sequence[_Route], terminals: Sequence[str]) -> list[int]:
    index = {t: i for i, t in enumerate(terminals)}
    m = [0] * len(terminals)
    for r in system:
        for t in r.ends:
            m[index[t]] += 1
    return m


def _shortcut(r: _Route) -> TPath:
    """Remove closed sub-walks from a trail, leaving a simple path with the same ends."""
    vs = [r.vertices[0]]
    es: list[int] = []
    pos = {r.vertices[0]: 0}
    for e, w in zip(r.edges, r.vertices[1:]):
        if w in pos:
            k = pos[w]
            for x in vs[k + 1:]:
                del pos[x]
            del vs[k + 1:]
            del es[k:]
        else:
            pos[w] = len(vs)
            vs.append(w)
            es.append(e)
    return TPath(tuple(vs), tuple(es))


class _Exchanger:
    def __init__(self, g: Multigraph, P2: list[_Route]) -> None:
        self.g = g
        self.T = g.terminals
        self.P2 = P2
        self.hat2 = _transitions(P2)
        self.E2 = {e for r in P2 for e in r.edges}
        self.m2 = _demand(P2, self.T)
        self.trace: list[dict[str, Any]] = []

    def param(self, P1: list[_Route]) -> int:
        return len(_transitions(P1) - self.hat2)

    def note(self, case: str, s: str, action: str, route: _Route, param: int,
             **extra: Any) -> None:
        rec = {"case": case, "s": s, "action": action, "path": route.label(),
               "parameter": param, "depth": len(self.trace)}
        rec.update(extra)
        self.trace.append(rec)

    def recurse(self, P1: list[_Route], sigma: Step, parent: int) -> tuple[str, Optional[Step], list[_Route]]:
        p = self.param(P1)
        if p >= parent:
            raise AssertionError(
                f"induction parameter did not decrease: {parent} -> {p}")
        return self.run(P1, sigma)

    def run(self, P1: list[_Route], sigma: Step) -> tuple[str, Optional[Step], list[_Route]]:
        T, m2 = self.T, self.m2
        m1 = _demand(P1, T)
        if not sigma.is_legal(m1, m2):
            raise ExchangeError(f"{sigma.label(T)} is not a step from {m1} toward {m2}")
        if sigma.delta == 0:
            return FIRST, None, P1
        param = self.param(P1)
        s = T[sigma.coord]  # type: ignore[index]
        idx = {t: i for i, t in enumerate(T)}

        if sigma.delta == -1:
            at_s = [r for r in P1 if s in r.ends]
            direct = [r for r in at_s if m1[idx[r.other(s)]] > m2[idx[r.other(s)]]]
            if direct:
                P = min(direct, key=lambda r: (idx[r.other(s)], r.key()))
                t = P.other(s)
                self.note("1", s, "delete", P, param, second=f"-{t}")
                return SECOND, Step(-1, idx[t]), [r for r in P1 if r is not P]
            cands = [r for r in at_s if r.end_edge(s) not in self.E2]
            if not cands:
                raise AssertionError("no path at s with an edge unused by the second system")
            P = min(cands, key=_Route.key)
            t = P.other(s)
            self.note("1", s, "delete-and-recurse", P, param, first=f"+{t}")
            return self.recurse([r for r in P1 if r is not P], Step(1, idx[t]), param)

        E1 = {e for r in P1 for e in r.edges}
        at_s2 = [r for r in self.P2 if s in r.ends]
        free = [r for r in at_s2 if not E1.intersection(r.edges)]
        if free:
            P = min(free, key=_Route.key).from_end(s)
            t = P.ends[1]
            if m1[idx[t]] < m2[idx[t]]:
                self.note("2", s, "add", P, param, second=f"+{t}")
                return SECOND, Step(1, idx[t]), P1 + [P]
            swap = [r for r in P1 if t in r.ends and r.end_edge(t) not in self.E2]
            if not swap:
                raise AssertionError("no path at t with an edge unused by the second system")
            Q = min(swap, key=_Route.key)
            q = Q.other(t)
            P1b = [r for r in P1 if r is not Q] + [P]
            if q != s and m1[idx[q]] > m2[idx[q]]:
                self.note("2", s, "swap", P, param, removed=Q.label(), second=f"-{q}")
                return SECOND, Step(-1, idx[q]), P1b
            self.note("2", s, "swap-and-recurse", P, param, removed=Q.label(), first=f"+{q}")
            return self.recurse(P1b, Step(1, idx[q]), param)

        cands = [r for r in at_s2 if r.end_edge(s) not in E1]
        if not cands:
            raise AssertionError("no path of the second system at s with a free first edge")
        P = min(cands, key=_Route.key).from_end(s)
        i = next(k for k, e in enumerate(P.edges) if e in E1)
        if i == 0:
            raise AssertionError("first shared edge is incident to s")
        u, e = P.vertices[i], P.edges[i]
        if self.g.is_terminal(u):
            raise AssertionError("rerouting vertex u is a terminal")
        Q = next(r for r in P1 if e in r.edges)
        j = Q.edges.index(e)
        if Q.vertices[j] == u:
            # e leads from u toward the last vertex of Q
            with_e = _Route(Q.vertices[j:], Q.edges[j:])
            without_e = _Route(Q.vertices[j::-1], Q.edges[j - 1::-1] if j else ())
        else:
            with_e = _Route(Q.vertices[j + 1::-1], Q.edges[j::-1])
            without_e = _Route(Q.vertices[j + 1:], Q.edges[j + 1:])
        seg = with_e if with_e.vertices[-1] != s else without_e
        q = seg.vertices[-1]
        r_end = Q.other(q)
        Qp = _Route(P.vertices[:i] + seg.vertices, P.edges[:i] + seg.edges)
        P1b = [x for x in P1 if x is not Q] + [Qp]
        if r_end != s and m1[idx[r_end]] > m2[idx[r_end]]:
            self.note("2", s, "reroute", Qp, param, removed=Q.label(), shared_edge=e,
                      second=f"-{r_end}")
            return SECOND, Step(-1, idx[r_end]), P1b
        self.note("2", s, "reroute-and-recurse", Qp, param, removed=Q.label(), shared_edge=e,
                  first=f"+{r_end}")
        return self.recurse(P1b, Step(1, idx[r_end]), param)


def _routes(s: PathSystem) -> list[_Route]:
    return [_Route(p.vertices, p.edges) for p in s.paths]


def exchange_step_edge(g: Multigraph, P1: PathSystem, P2: PathSystem, sigma: Step) -> ExchangeResult:
    """Second step for ``sigma`` from ``demand(P1)`` toward ``demand(P2)``, with a witness.

    Raises ExchangeError if the systems are not valid edge-disjoint systems
    of ``g`` or ``sigma`` is not a step between their demand vectors.
    """
    for name, S in (("P1", P1), ("P2", P2)):
        if S.mode != EDGE:
            raise ExchangeError(f"{name} must be an edge-disjoint system")
        v = is_valid_system(g, S)
        if not v.ok:
            raise ExchangeError(f"{name} is not valid: {v.reason}")
    ex = _Exchanger(g, _routes(P2))
    kind, step, routes = ex.run(_routes(P1), sigma)
    system = PathSystem(tuple(_shortcut(r) for r in routes), EDGE)
    return ExchangeResult(kind, demand_of(system, g.terminals), system, step, tuple(ex.trace))


def exchange_step_generic(g: Multigraph, mode: str, m1: DemandLike, m2: DemandLike,
                          sigma: Step, partition: PartitionArg = None) -> ExchangeResult:
    """Second step by exhaustive search: realize ``m1 + sigma``, else the
    first step ``delta`` (in coordinate order) with ``m1 + sigma + delta``
    realizable."""
    m1, m2 = g.vector(m1), g.vector(m2)
    if not sigma.is_legal(m1, m2):
        raise ExchangeError(f"{sigma.label(g.terminals)} is not a step from {m1} toward {m2}")
    for name, m in (("m1", m1), ("m2", m2)):
        if realize(g, mode, m, partition) is None:
            raise ExchangeError(f"{name}={m} is not feasible")
    x1 = sigma.apply(m1)
    w = realize(g, mode, x1, partition) if min(x1) >= 0 else None
    if w is not None:
        return ExchangeResult(FIRST, x1, w)
    for delta in steps_toward(x1, m2):
        x2 = delta.apply(x1)
        if min(x2) < 0:
            continue
        w = realize(g, mode, x2, partition)
        if w is not None:
            return ExchangeResult(SECOND, x2, w, delta)
    raise TheoremViolation("no second step found", {
        "instance": g.to_dict(), "mode": mode, "m1": list(m1), "m2": list(m2),
        "step": sigma.label(g.terminals),
    })


def certify(g: Multigraph, m1: Sequence[int], m2: Sequence[int], sigma: Step,
            result: ExchangeResult, mode: str = EDGE,
            partition: PartitionArg = None) -> Validity:
    """Check an exchange result: witness validity, demand equality, step legality."""
    v = is_valid_system(g, result.system, partition)
    if not v.ok:
        return Validity(False, f"witness invalid: {v.reason}")
    if result.system.mode != mode:
        return Validity(False, "witness has the wrong mode")
    got = demand_of(result.system, g.terminals)
    x1 = sigma.apply(m1)
    if result.outcome == FIRST:
        if got != x1:
            return Validity(False, f"witness realizes {got}, expected {x1}")
        return Validity(True)
    if result.step is None or result.step.delta == 0:
        return Validity(False, "second step missing")
    if not result.step.is_legal(x1, m2):
        return Validity(False, f"{result.step.label(g.terminals)} is not a step from {x1} toward {tuple(m2)}")
    x2 = result.step.apply(x1)
    if got != x2 or tuple(result.vector) != x2:
        return Validity(False, f"witness realizes {got}, expected {x2}")
    return Validity(True)
