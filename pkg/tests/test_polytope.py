from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tpathjump.families import named
from tpathjump.graph import InstanceError, TerminalPartition, build_graph
from tpathjump.lp import solve_lp
from tpathjump.packing import enumerate_feasible, realize
from tpathjump.polytope import (GuardError, PairFunction, check_bisubmodular, enumerate_vertices,
                                fmt, integer_points, intersect_and_check, intersect_systems,
                                is_jump_on_integer_points, parity_feasibility_check,
                                polytope_member, reduced_inequalities, relaxed_feasible,
                                support_function, support_pair_function)

from oracles import in_polytope, vertices_by_bases
from strategies import graphs_with_partition

STAR = named("star")
F = Fraction


def test_star_rows_and_table():
    S = reduced_inequalities(STAR)
    assert S.bound({"a"}, {"b"}) == 1
    rows = {(tuple(sorted(r.A)), tuple(sorted(r.B))): r.bound for r in S.rows}
    assert rows[("a",), ()] == 1
    # X = V has empty cut: x(a) <= x(b) + x(c)
    assert rows[("a",), ("b", "c")] == 0
    assert all(len(A) == 1 for A, _ in rows)
    assert S.to_dict()["rows"][0] == {"A": ["a"], "B": [], "bound": 1}


def test_membership_examples():
    S = reduced_inequalities(STAR)
    assert polytope_member(S, (1, 1, 1))
    assert not polytope_member(S, (2, 0, 0))
    assert polytope_member(S, (0, 0, 0))
    assert not polytope_member(S, (-1, 0, 0))
    assert polytope_member(S, {"a": F(1, 2), "b": 1, "c": 1})
    with pytest.raises(InstanceError):
        polytope_member(S, (1, 1))


def test_vertex_examples():
    verts = enumerate_vertices(reduced_inequalities(STAR))
    assert (1, 1, 1) in verts and (1, 1, 0) in verts and (0, 0, 0) in verts
    # X = V has empty cut, forcing x(a) = x(b): the polytope is a segment
    edge = named("edge")
    assert enumerate_vertices(reduced_inequalities(edge)) == [(0, 0), (1, 1)]
    assert not relaxed_feasible(edge, None, (1, 0))
    g = build_graph({"vertices": ["a"], "edges": [], "terminals": []})
    assert enumerate_vertices(reduced_inequalities(g)) == [()]


def test_guards(monkeypatch):
    S = reduced_inequalities(STAR)
    monkeypatch.setenv("TPJ_GUARD", "dim=2")
    with pytest.raises(GuardError):
        enumerate_vertices(S)
    monkeypatch.setenv("TPJ_GUARD", "vertices=3")
    with pytest.raises(GuardError):
        reduced_inequalities(STAR)


def test_relaxed_examples():
    assert relaxed_feasible(STAR, None, (1, 1, 1))
    assert not relaxed_feasible(STAR, None, (2, 0, 0))
    assert relaxed_feasible(STAR, None, (0, 0, 0))
    assert not relaxed_feasible(STAR, None, (F(3, 2), F(1, 2), 0))


def test_star_point_in_polytope_but_infeasible():
    assert polytope_member(reduced_inequalities(STAR), (1, 1, 1))
    assert (1, 1, 1) not in enumerate_feasible(STAR, "edge")


def test_support_examples():
    S = reduced_inequalities(STAR)
    assert support_function(S, {"a"}, ()) == 1
    assert support_function(S, (), ()) == 0
    assert support_function(S, {"a", "b"}, ()) == 2
    with pytest.raises(ValueError):
        support_function(S, {"a"}, {"a"})


def test_bisubmodular_examples():
    assert check_bisubmodular(support_pair_function(reduced_inequalities(STAR))).ok
    pairs = PairFunction.pairs(("1", "2"))
    vals = {p: F(0) for p in pairs}
    vals[(frozenset({"1", "2"}), frozenset())] = F(1)
    v = check_bisubmodular(PairFunction(("1", "2"), vals))
    assert not v.ok
    assert check_bisubmodular(PairFunction(("1", "2"), {p: F(0) for p in pairs})).ok
    with pytest.raises(ValueError):
        check_bisubmodular(PairFunction(("1", "2"), {}))


def test_parity_examples():
    t = named("triangle")
    assert realize(t, "edge", (2, 2, 2), None, through_terminals=True) is not None
    v = parity_feasibility_check(t)
    assert v.ok and v.detail["checked"] >= 2
    # star leaves have odd degree: no integer point meets the parity condition
    assert parity_feasibility_check(STAR).detail["checked"] == 0


def test_intersection_examples():
    t = named("triangle")
    rep = intersect_and_check(t, "singletons", "ab|c")
    assert rep.all_integral and rep.attainer is not None and rep.ok
    same = intersect_and_check(t, "singletons", "singletons")
    assert sorted(same.vertices) == sorted(enumerate_vertices(reduced_inequalities(t)))
    sq = named("square")
    assert intersect_and_check(sq, "singletons", "singletons").all_integral
    with pytest.raises(InstanceError, match="odd degree"):
        intersect_and_check(STAR, "singletons", "ab|c")
    d = rep.to_dict()
    assert d["conjecture_counterexample_candidates"] == []


def test_fmt():
    assert fmt(F(3, 2)) == "3/2" and fmt(F(2)) == "2"


@settings(max_examples=60, deadline=None)
@given(graphs_with_partition(max_vertices=4, max_edges=6))
def test_rows_match_cut_oracle(gp):
    g, part = gp
    S = reduced_inequalities(g, part)
    caps = [min(b for (A, B), b in S.table.items() if A == {t} and not B) for t in g.terminals]
    for x in integer_points(S):
        assert in_polytope(g, part, x)
    # every point of the slightly larger box is classified like the oracle
    from itertools import product

    for x in product(*(range(c + 2) for c in caps)):
        assert polytope_member(S, x) == in_polytope(g, part, x)


@settings(max_examples=60, deadline=None)
@given(graphs_with_partition(max_vertices=5, max_edges=7))
def test_vertices_match_basis_enumeration(gp):
    g, part = gp
    S = reduced_inequalities(g, part)
    A, b = S.matrix()
    assert enumerate_vertices(S) == vertices_by_bases(A, b, len(g.terminals))


@settings(max_examples=40, deadline=None)
@given(graphs_with_partition(max_vertices=5, max_edges=7), st.data())
def test_support_matches_lp(gp, data):
    g, part = gp
    S = reduced_inequalities(g, part)
    A, b = S.matrix()
    labels = data.draw(st.lists(st.integers(0, 2), min_size=len(g.terminals),
                                max_size=len(g.terminals)))
    c = [1 if l == 1 else -1 if l == 2 else 0 for l in labels]
    r = solve_lp(c, list(A), list(b), n=len(c))
    assert support_function(S, [t for t, l in zip(g.terminals, labels) if l == 1],
                            [t for t, l in zip(g.terminals, labels) if l == 2]) == r.value


@settings(max_examples=60, deadline=None)
@given(graphs_with_partition(max_vertices=5, max_edges=7))
def test_polytope_properties(gp):
    g, part = gp
    S = reduced_inequalities(g, part)
    verts = enumerate_vertices(S)
    assert all(c.denominator == 1 for v in verts for c in v)
    assert is_jump_on_integer_points(S).ok
    for v in verts:
        assert relaxed_feasible(g, part, v)
    assert check_bisubmodular(support_pair_function(S)).ok
    assert parity_feasibility_check(g, part).ok
    # feasible vectors of paths through terminals lie in the polytope
    for m in enumerate_feasible(g, "edge", part, through_terminals=True):
        assert polytope_member(S, m)


@settings(max_examples=40, deadline=None)
@given(graphs_with_partition(max_vertices=4, max_edges=6), st.data())
def test_intersection_is_conjunction(gp, data):
    g, part = gp
    S1, S2 = reduced_inequalities(g, part), reduced_inequalities(g)
    S = intersect_systems(S1, S2)
    x = tuple(F(data.draw(st.integers(0, 6)), 2) for _ in g.terminals)
    assert polytope_member(S, x) == (polytope_member(S1, x) and polytope_member(S2, x))


def test_singletons_partition_default():
    g = named("k4")
    assert reduced_inequalities(g) == reduced_inequalities(g, TerminalPartition.singletons(g.terminals))
