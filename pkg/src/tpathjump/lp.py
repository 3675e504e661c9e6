"""Exact rational linear programming (dense tableau simplex, Bland's rule).

Every number is an exact rational (``gmpy2.mpq`` inside the tableau,
:class:`fractions.Fraction` in results), so feasibility and optimal values
are decided without tolerances.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from gmpy2 import mpq

__all__ = ["LPResult", "solve_lp"]

Num = "int | Fraction"


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    value: Optional[Fraction] = None
    x: Optional[tuple[Fraction, ...]] = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def _pivot(tab: list[list[mpq]], basis: list[int], r: int, c: int) -> None:
    row = tab[r]
    p = row[c]
    if p != 1:
        tab[r] = row = [v / p for v in row]
    for i, other in enumerate(tab):
        if i != r:
            f = other[c]
            if f:
                tab[i] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _run(tab: list[list[mpq]], basis: list[int], obj: int, allowed: int) -> bool:
    """Minimize the objective row ``tab[obj]`` (reduced costs, last column = -value).

    Only columns below ``allowed`` may enter.  Returns False if unbounded.
    """
    m = len(tab)
    while True:
        cost = tab[obj]
        enter = next((j for j in range(allowed) if cost[j] < 0), None)
        if enter is None:
            return True
        best = None
        for i in range(m):
            if i == obj or i >= len(basis):
                continue
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(tab, basis, best[1], enter)


def solve_lp(c: Optional[Sequence[Num]] = None,
             A_ub: Sequence[Sequence[Num]] = (), b_ub: Sequence[Num] = (),
             A_eq: Sequence[Sequence[Num]] = (), b_eq: Sequence[Num] = (),
             n: Optional[int] = None) -> LPResult:
    """Maximize ``c @ x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``.

    With ``c`` omitted only feasibility is decided (phase one).
    """
    if n is None:
        rows = list(A_ub) + list(A_eq)
        n = len(c) if c is not None else (len(rows[0]) if rows else 0)
    m_ub, m_eq = len(A_ub), len(A_eq)
    m = m_ub + m_eq
    n_slack = m_ub
    # columns: x (n) | slacks (m_ub) | artificials (<= m) | rhs
    rows_: list[list[mpq]] = []
    rhs: list[mpq] = []
    for i in range(m):
        if i < m_ub:
            a, b = A_ub[i], b_ub[i]
            slack = [mpq(0)] * n_slack
            slack[i] = mpq(1)
        else:
            a, b = A_eq[i - m_ub], b_eq[i - m_ub]
            slack = [mpq(0)] * n_slack
        row = [mpq(v) for v in a] + slack
        b = mpq(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows_.append(row)
        rhs.append(b)

    need_art = [i for i in range(m) if not (i < m_ub and rows_[i][n + i] == 1)]
    n_art = len(need_art)
    width = n + n_slack + n_art
    tab: list[list[mpq]] = []
    basis: list[int] = []
    for i in range(m):
        art = [mpq(0)] * n_art
        if i in need_art:
            k = need_art.index(i)
            art[k] = mpq(1)
            basis.append(n + n_slack + k)
        else:
            basis.append(n + i)
        tab.append(rows_[i] + art + [rhs[i]])

    # phase one: minimize the sum of artificials
    phase1 = [mpq(0)] * (width + 1)
    for i in need_art:
        for j in range(width + 1):
            if j < n + n_slack or j == width:
                phase1[j] -= tab[i][j]
    tab.append(phase1)
    obj = m
    _run(tab, basis, obj, n + n_slack)
    if tab[obj][-1] != 0:
        return LPResult("infeasible")
    # drive remaining artificials out of the basis
    for i in range(m):
        if basis[i] >= n + n_slack:
            j = next((j for j in range(n + n_slack) if tab[i][j] != 0), None)
            if j is not None:
                _pivot(tab, basis, i, j)
    tab.pop()

    def solution() -> tuple[Fraction, ...]:
        x = [mpq(0)] * n
        for i, bj in enumerate(basis):
            if bj < n:
                x[bj] = tab[i][-1]
        return tuple(Fraction(int(v.numerator), int(v.denominator)) for v in x)

    if c is None:
        return LPResult("optimal", Fraction(0), solution())

    # phase two: minimize -c @ x
    cost = [mpq(0)] * (width + 1)
    for j, v in enumerate(c):
        cost[j] = -mpq(v)
    for i, bj in enumerate(basis):
        f = cost[bj]
        if f:
            cost = [a - f * b for a, b in zip(cost, tab[i])]
    tab.append(cost)
    if not _run(tab, basis, m, n + n_slack):
        return LPResult("unbounded")
    x = solution()
    return LPResult("optimal", sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0)), x)
