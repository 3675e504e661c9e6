from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from tpathjump.lp import solve_lp


def test_small_optimum():
    r = solve_lp([1, 1], [[1, 2], [3, 1]], [4, 6])
    assert r.status == "optimal" and r.value == Fraction(14, 5)
    assert r.x == (Fraction(8, 5), Fraction(6, 5))


def test_infeasible_and_unbounded():
    assert not solve_lp(None, [[1, 1]], [1], [[1, 1]], [2]).feasible
    assert solve_lp([1, 0], [[-1, 1]], [1]).status == "unbounded"
    assert solve_lp(None, [], [], [[1, 1]], [Fraction(1, 3)]).feasible


def test_negative_rhs_and_degenerate():
    # x1 - x2 <= -1 forces x2 >= 1
    r = solve_lp([-1, -1], [[1, -1]], [-1])
    assert r.value == -1 and r.x == (0, 1)
    r = solve_lp([1, 1, 1], [[1, 1, 0], [0, 1, 1], [1, 0, 1], [1, 1, 1]], [1, 1, 1, 1])
    assert r.value == 1


small = st.integers(-3, 3)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3), st.integers(1, 4), st.data())
def test_matches_scipy(n, m, data):
    A = [[data.draw(small) for _ in range(n)] for _ in range(m)]
    b = [data.draw(st.integers(0, 5)) for _ in range(m)]
    c = [data.draw(small) for _ in range(n)]
    box = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    A_all, b_all = A + box, b + [4] * n
    r = solve_lp(c, A_all, b_all)
    ref = linprog(-np.array(c), A_ub=np.array(A_all), b_ub=np.array(b_all),
                  bounds=[(0, None)] * n, method="highs")
    assert r.status == "optimal" and ref.status == 0
    assert abs(float(r.value) + ref.fun) < 1e-7
    assert all(sum(a * x for a, x in zip(row, r.x)) <= bb for row, bb in zip(A_all, b_all))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_equality_feasibility_matches_scipy(n, m, data):
    A = [[data.draw(st.integers(0, 2)) for _ in range(n)] for _ in range(m)]
    b = [Fraction(data.draw(st.integers(0, 6)), data.draw(st.integers(1, 3))) for _ in range(m)]
    r = solve_lp(None, [[1] * n], [3], A, b)
    ref = linprog(np.zeros(n), A_ub=np.ones((1, n)), b_ub=[3], A_eq=np.array(A, dtype=float),
                  b_eq=np.array([float(x) for x in b]), bounds=[(0, None)] * n, method="highs")
    assert r.feasible == (ref.status == 0)
    if r.feasible:
        assert all(sum(a * x for a, x in zip(row, r.x)) == bb for row, bb in zip(A, b))
