"""The polytope of relaxed-feasible vectors, computed exactly.

For a partition of the terminals into classes, the polytope consists of the
nonnegative vectors ``m`` on the terminals with

    m(X & C) - m(X & (T - C)) <= d(X)    for every vertex set X and class C.

Only the pair ``(A, B) = (X & C, X & (T - C))`` matters on the left, so the
family collapses to one row per pair, with the smallest cut value as bound.
Everything here is exact: coordinates are ``Fraction`` or ``int``.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Optional, Union

from .graph import InstanceError, Multigraph, TerminalPartition
from .jump import FiniteJumpSystem, Verdict, check_two_step_axiom
from .lp import solve_lp
from .packing import realize
from .paths import EDGE, enumerate_t_paths

__all__ = [
    "GuardError",
    "Inequality",
    "IntersectionReport",
    "PairFunction",
    "ReducedInequalitySystem",
    "check_bisubmodular",
    "enumerate_vertices",
    "fmt",
    "guard",
    "integer_points",
    "intersect_and_check",
    "intersect_systems",
    "is_jump_on_integer_points",
    "parity_feasibility_check",
    "polytope_member",
    "reduced_inequalities",
    "relaxed_feasible",
    "support_function",
    "support_pair_function",
]

Point = tuple[Fraction, ...]
PointLike = Union[Mapping[str, Any], Sequence[Any]]


class GuardError(InstanceError):
    """Instance exceeds a desk-scale size guard (see ``TPJ_GUARD``)."""


def guard(name: str, default: int) -> int:
    """Size guard ``name``, overridable through ``TPJ_GUARD="vertices=20,dim=8"``."""
    raw = os.environ.get("TPJ_GUARD", "")
    for item in raw.split(","):
        key, _, value = item.partition("=")
        if key.strip() == name and value.strip():
            return int(value)
    return default


def fmt(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True, order=True)
class Inequality:
    """``x(A) - x(B) <= bound``, with ``A`` and ``B`` disjoint terminal sets."""

    A: frozenset[str]
    B: frozenset[str]
    bound: int

    def coefficients(self, ground: Sequence[str]) -> tuple[int, ...]:
        return tuple(1 if t in self.A else -1 if t in self.B else 0 for t in ground)

    def to_dict(self, ground: Sequence[str]) -> dict[str, Any]:
        return {"A": [t for t in ground if t in self.A],
                "B": [t for t in ground if t in self.B], "bound": self.bound}


@dataclass(frozen=True)
class ReducedInequalitySystem:
    """Deduplicated rows of the polytope plus the implicit ``x >= 0``.

    ``table`` keeps the bound of every pair ``(A, B)`` that occurs in the
    full family, including rows dropped as dominated.
    """

    ground: tuple[str, ...]
    rows: tuple[Inequality, ...]
    table: Mapping[tuple[frozenset, frozenset], int] = field(compare=False, hash=False)

    def bound(self, A: Iterable[str], B: Iterable[str]) -> Optional[int]:
        return self.table.get((frozenset(A), frozenset(B)))

    def matrix(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        return (tuple(r.coefficients(self.ground) for r in self.rows),
                tuple(r.bound for r in self.rows))

    def to_dict(self) -> dict[str, Any]:
        return {"ground": list(self.ground),
                "rows": [r.to_dict(self.ground) for r in self.rows]}


def _drop_dominated(table: Mapping[tuple[frozenset, frozenset], int]) -> tuple[Inequality, ...]:
    # x >= 0 gives x(A) - x(B) <= x(A') - x(B') whenever A <= A' and B' <= B
    items = [(A, B, b) for (A, B), b in table.items() if A]
    keep = []
    for A, B, b in items:
        dominated = any(
            (A2, B2) != (A, B) and A <= A2 and B2 <= B and b2 <= b
            for A2, B2, b2 in items
        )
        if not dominated:
            keep.append(Inequality(A, B, b))
    return tuple(sorted(keep, key=lambda r: (len(r.A) + len(r.B), sorted(r.A), sorted(r.B))))


def reduced_inequalities(g: Multigraph, partition: Union[str, TerminalPartition, None] = None
                         ) -> ReducedInequalitySystem:
    """Rows of the polytope for ``partition`` (singletons by default).

    Enumerates all ``2^|V|`` vertex sets, so ``|V|`` is capped by the
    ``vertices`` guard (default 16).
    """
    part = g.partition(partition) or TerminalPartition.singletons(g.terminals)
    part.validate(g.terminals)
    limit = guard("vertices", 16)
    n = len(g.vertices)
    if n > limit:
        raise GuardError(f"{n} vertices exceed the guard of {limit}")
    bit = {v: 1 << i for i, v in enumerate(g.vertices)}
    emask = [(bit[u], bit[v]) for u, v in g.edges]
    tbits = [(t, bit[t]) for t in g.terminals]
    table: dict[tuple[frozenset, frozenset], int] = {}
    for X in range(1 << n):
        d = sum(1 for a, b in emask if bool(X & a) != bool(X & b))
        inside = frozenset(t for t, tb in tbits if X & tb)
        for C in part.classes:
            key = (inside & C, inside - C)
            if d < table.get(key, d + 1):
                table[key] = d
    return ReducedInequalitySystem(tuple(g.terminals), _drop_dominated(table), table)


def intersect_systems(*systems: ReducedInequalitySystem) -> ReducedInequalitySystem:
    """Rows describing the intersection of polytopes over the same terminals."""
    ground = systems[0].ground
    table: dict[tuple[frozenset, frozenset], int] = {}
    for S in systems:
        if S.ground != ground:
            raise ValueError("systems live on different terminal orders")
        for key, b in S.table.items():
            table[key] = min(b, table.get(key, b))
    return ReducedInequalitySystem(ground, _drop_dominated(table), table)


def _point(ineqs: ReducedInequalitySystem, x: PointLike) -> Point:
    if isinstance(x, Mapping):
        if set(x) != set(ineqs.ground):
            raise InstanceError("point keys must be exactly the terminals")
        x = [x[t] for t in ineqs.ground]
    x = tuple(Fraction(v) for v in x)
    if len(x) != len(ineqs.ground):
        raise InstanceError("point has the wrong dimension")
    return x


def polytope_member(ineqs: ReducedInequalitySystem, x: PointLike) -> bool:
    x = _point(ineqs, x)
    if any(v < 0 for v in x):
        return False
    A, b = ineqs.matrix()
    return all(sum(a * v for a, v in zip(row, x) if a) <= bound for row, bound in zip(A, b))


def _coordinate_caps(ineqs: ReducedInequalitySystem) -> list[int]:
    caps = []
    for t in ineqs.ground:
        bounds = [r.bound for r in ineqs.rows if t in r.A and not r.B]
        bounds += [b for (A, B), b in ineqs.table.items() if t in A and not B]
        if not bounds:
            raise AssertionError(f"coordinate {t} is unbounded")
        caps.append(min(bounds))
    return caps


@lru_cache(maxsize=512)
def _vertices(ineqs: ReducedInequalitySystem) -> tuple[Point, ...]:
    d = len(ineqs.ground)
    if d == 0:
        return ((),)
    caps = _coordinate_caps(ineqs)
    # constraints a.x <= b: x >= 0, the coordinate caps, then the rows
    cons: list[tuple[tuple[int, ...], int]] = []
    for i in range(d):
        cons.append((tuple(-1 if j == i else 0 for j in range(d)), 0))
    for i in range(d):
        cons.append((tuple(1 if j == i else 0 for j in range(d)), caps[i]))
    A, b = ineqs.matrix()
    cons.extend(zip(A, b))

    def slack(k: int, x: Point) -> Fraction:
        a, bk = cons[k]
        return bk - sum(ai * xi for ai, xi in zip(a, x) if ai)

    # start from the box of the caps, then cut with one row at a time
    verts: dict[Point, int] = {}
    for corner in product(*({Fraction(0), Fraction(c)} for c in caps)):
        act = 0
        for k in range(2 * d):
            if slack(k, corner) == 0:
                act |= 1 << k
        verts[corner] = verts.get(corner, 0) | act

    for k in range(2 * d, len(cons)):
        plus, zero, minus = [], [], []
        for x, act in verts.items():
            s = slack(k, x)
            (plus if s > 0 else zero if s == 0 else minus).append((x, act, s))
        if not minus:
            for x, act, _ in zero:
                verts[x] = act | (1 << k)
            continue
        acts = list(verts.values())
        new: dict[Point, int] = {}
        for x, act, _ in plus:
            new[x] = act
        for x, act, _ in zero:
            new[x] = act | (1 << k)
        for x, ax, sx in plus:
            for y, ay, sy in minus:
                common = ax & ay
                if bin(common).count("1") < d - 1:
                    continue
                # adjacent iff no third vertex lies on the face of the common tight set
                if sum(1 for a in acts if a & common == common) > 2:
                    continue
                lam = sx / (sx - sy)
                z = tuple(xi + lam * (yi - xi) for xi, yi in zip(x, y))
                new[z] = new.get(z, 0) | common | (1 << k)
        verts = new
    return tuple(sorted(verts))


def enumerate_vertices(ineqs: ReducedInequalitySystem, dim: Optional[int] = None) -> list[Point]:
    """All vertices of the polytope, exact and sorted.

    Double description: start with the box given by single-coordinate caps
    and cut with the rows one at a time, creating a new vertex on every edge
    that crosses the cutting hyperplane.
    """
    d = len(ineqs.ground) if dim is None else dim
    if d != len(ineqs.ground):
        raise InstanceError("dimension does not match the system")
    limit = guard("dim", 6)
    if d > limit:
        raise GuardError(f"dimension {d} exceeds the guard of {limit}")
    return list(_vertices(ineqs))


def integer_points(ineqs: ReducedInequalitySystem) -> FiniteJumpSystem:
    """All integer points of the polytope (scan of the box of coordinate caps)."""
    caps = _coordinate_caps(ineqs)
    A, b = ineqs.matrix()
    pts = []
    for x in product(*(range(c + 1) for c in caps)):
        if all(sum(a * v for a, v in zip(row, x) if a) <= bound for row, bound in zip(A, b)):
            pts.append(x)
    return FiniteJumpSystem(ineqs.ground, frozenset(pts), tuple(caps))


def relaxed_feasible(g: Multigraph, partition: Union[str, TerminalPartition, None],
                     x: PointLike) -> bool:
    """Whether fractional path weights realize ``x`` with every edge loaded at most 1.

    Decided exactly by phase one of the rational simplex method over the
    paths of :func:`enumerate_t_paths`.
    """
    part = g.partition(partition) or TerminalPartition.singletons(g.terminals)
    ground = tuple(g.terminals)
    if isinstance(x, Mapping):
        x = [x[t] for t in ground]
    x = tuple(Fraction(v) for v in x)
    if any(v < 0 for v in x):
        return False
    A_ub, A_eq = _path_matrices(g, part)
    return solve_lp(None, A_ub, [1] * len(g.edges), A_eq, list(x), n=len(A_ub[0]) if A_ub else 0
                    ).feasible


@lru_cache(maxsize=256)
def _path_matrices(g: Multigraph, part: TerminalPartition) -> tuple[list, list]:
    paths = enumerate_t_paths(g, part, through_terminals=True)
    A_ub = [[1 if e in p.edges else 0 for p in paths] for e in range(len(g.edges))]
    A_eq = [[1 if t in p.ends else 0 for p in paths] for t in g.terminals]
    return A_ub, A_eq


def support_function(ineqs: ReducedInequalitySystem, A: Iterable[str], B: Iterable[str]) -> Fraction:
    """``max x(A) - x(B)`` over the polytope, as the maximum over its vertices."""
    A, B = frozenset(A), frozenset(B)
    if A & B:
        raise ValueError("A and B must be disjoint")
    c = [1 if t in A else -1 if t in B else 0 for t in ineqs.ground]
    return max(sum(ci * xi for ci, xi in zip(c, v)) for v in enumerate_vertices(ineqs))


@dataclass(frozen=True)
class PairFunction:
    """A function on pairs of disjoint subsets of ``ground``."""

    ground: tuple[str, ...]
    values: Mapping[tuple[frozenset, frozenset], Fraction]

    def __call__(self, A: Iterable[str], B: Iterable[str]) -> Fraction:
        return self.values[(frozenset(A), frozenset(B))]

    @staticmethod
    def pairs(ground: Sequence[str]) -> list[tuple[frozenset, frozenset]]:
        out = []
        for labels in product((0, 1, 2), repeat=len(ground)):
            out.append((frozenset(t for t, l in zip(ground, labels) if l == 1),
                        frozenset(t for t, l in zip(ground, labels) if l == 2)))
        return out


def support_pair_function(ineqs: ReducedInequalitySystem) -> PairFunction:
    verts = enumerate_vertices(ineqs)
    values = {}
    for A, B in PairFunction.pairs(ineqs.ground):
        c = [1 if t in A else -1 if t in B else 0 for t in ineqs.ground]
        values[(A, B)] = max(sum(ci * xi for ci, xi in zip(c, v) if ci) for v in verts)
    return PairFunction(ineqs.ground, values)


@lru_cache(maxsize=None)
def _lattice_table(n: int) -> tuple[tuple[int, int, int, int], ...]:
    """Index quadruples (p, q, meet, join) over pairs in :meth:`PairFunction.pairs` order, p <= q."""
    labels = list(product((0, 1, 2), repeat=n))
    index = {lab: i for i, lab in enumerate(labels)}
    out = []
    for p, a in enumerate(labels):
        for q in range(p, len(labels)):
            b = labels[q]
            meet = tuple(x if x == y else 0 for x, y in zip(a, b))
            # join: in A|A' and not in B|B' (or symmetrically); opposite labels cancel
            join = tuple(0 if {x, y} == {1, 2} else max(x, y) for x, y in zip(a, b))
            out.append((p, q, index[meet], index[join]))
    return tuple(out)


def check_bisubmodular(f: PairFunction) -> Verdict:
    """Verify f(A,B) + f(A',B') >= f(A&A', B&B') + f((A|A') - (B|B'), (B|B') - (A|A'))."""
    pairs = PairFunction.pairs(f.ground)
    missing = [p for p in pairs if p not in f.values]
    if missing:
        A, B = missing[0]
        raise ValueError(f"function undefined on ({sorted(A)}, {sorted(B)})")
    vals = [f.values[p] for p in pairs]
    for p, q, meet, join in _lattice_table(len(f.ground)):
        lhs = vals[p] + vals[q]
        rhs = vals[meet] + vals[join]
        if lhs < rhs:
            (A, B), (A2, B2) = pairs[p], pairs[q]
            return Verdict(False, {
                "pair1": [sorted(A), sorted(B)], "pair2": [sorted(A2), sorted(B2)],
                "lhs": fmt(lhs), "rhs": fmt(rhs),
            })
    return Verdict(True, detail={"pairs": len(pairs)})


def _parity_ok(g: Multigraph, m: Sequence[int]) -> bool:
    mv = dict(zip(g.terminals, m))
    return all((g.degree(v) + mv.get(v, 0)) % 2 == 0 for v in g.vertices)


def parity_feasibility_check(g: Multigraph, partition: Union[str, TerminalPartition, None] = None
                             ) -> Verdict:
    """Every integer point ``m`` of the polytope with ``m + deg`` even at every
    vertex (``m`` is 0 off the terminals) must be realizable by edge-disjoint
    paths joining different classes."""
    part = g.partition(partition) or TerminalPartition.singletons(g.terminals)
    pts = integer_points(reduced_inequalities(g, part))
    checked = skipped = 0
    for m in pts:
        if not _parity_ok(g, m):
            skipped += 1
            continue
        checked += 1
        if realize(g, EDGE, m, part, through_terminals=True) is None:
            return Verdict(False, {"m": g.as_dict(m)}, {"checked": checked, "skipped": skipped})
    return Verdict(True, detail={"checked": checked, "skipped": skipped})


@dataclass(frozen=True)
class IntersectionReport:
    ground: tuple[str, ...]
    vertices: tuple[Point, ...]
    all_integral: bool
    max_sum: Fraction
    attainer: Optional[tuple[int, ...]]
    attainer_witness: Any
    infeasible_vertices: tuple[Point, ...]

    @property
    def ok(self) -> bool:
        """Integral vertices and a feasible attainer of the maximum; the
        conjecture findings do not enter."""
        return self.all_integral and self.attainer is not None

    def to_dict(self) -> dict[str, Any]:
        name = lambda v: {t: fmt(c) for t, c in zip(self.ground, v)}  # noqa: E731
        return {
            "vertices": [name(v) for v in self.vertices],
            "all_integral": self.all_integral,
            "max_sum": fmt(self.max_sum),
            "attainer": None if self.attainer is None else dict(zip(self.ground, self.attainer)),
            "attainer_witness": None if self.attainer_witness is None
            else self.attainer_witness.to_dict(),
            "conjecture_counterexample_candidates": [name(v) for v in self.infeasible_vertices],
        }


def intersect_and_check(g: Multigraph, partition1: Union[str, TerminalPartition],
                        partition2: Union[str, TerminalPartition]) -> IntersectionReport:
    """Intersection of the polytopes of two partitions on an even-degree graph.

    Reports integrality of its vertices, the largest coordinate sum and an
    integer point attaining it that is realized by edge-disjoint paths
    joining different classes of both partitions, and every vertex that is
    not so realizable (candidates against the conjectured integral
    description of the intersection).
    """
    odd = [v for v in g.vertices if g.degree(v) % 2]
    if odd:
        raise InstanceError(f"vertices of odd degree: {odd}")
    p1, p2 = g.partition(partition1), g.partition(partition2)
    both = (p1, p2)
    S = intersect_systems(reduced_inequalities(g, p1), reduced_inequalities(g, p2))
    verts = enumerate_vertices(S)
    integral = all(c.denominator == 1 for v in verts for c in v)
    best = max(sum(v) for v in verts)
    attainer = witness = None
    if best.denominator == 1:
        for m in integer_points(S):
            if sum(m) == best:
                w = realize(g, EDGE, m, both, through_terminals=True)
                if w is not None:
                    attainer, witness = m, w
                    break
    bad = []
    for v in verts:
        if any(c.denominator != 1 for c in v):
            bad.append(v)
        elif realize(g, EDGE, tuple(int(c) for c in v), both, through_terminals=True) is None:
            bad.append(v)
    return IntersectionReport(S.ground, tuple(verts), integral, best, attainer, witness,
                              tuple(bad))


def is_jump_on_integer_points(ineqs: ReducedInequalitySystem) -> Verdict:
    return check_two_step_axiom(integer_points(ineqs))

