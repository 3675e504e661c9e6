import pytest
from hypothesis import given, settings, strategies as st

from tpathjump.families import named
from tpathjump.jump import (FiniteJumpSystem, Step, check_delta_matroid, check_even_sum,
                            check_two_step_axiom, steps_toward)
from tpathjump.packing import enumerate_feasible

from oracles import is_jump_system


def J(*vecs, ground=None):
    n = len(vecs[0]) if vecs else 2
    return FiniteJumpSystem.from_vectors(ground or [str(i) for i in range(n)], vecs)


def test_steps_toward_examples():
    assert steps_toward((1, 1, 0), (0, 1, 1)) == [Step(-1, 0), Step(1, 2)]
    assert steps_toward((1, 2), (1, 2)) == [Step(0)]
    assert steps_toward((0, 0), (3, 0)) == [Step(1, 0)]
    with pytest.raises(ValueError):
        steps_toward((0,), (0, 0))


def test_step_labels_roundtrip():
    ground = ("a", "b")
    for s in (Step(0), Step(1, 0), Step(-1, 1)):
        assert Step.parse(s.label(ground), ground) == s
    for bad in ("x", "+z", "*a", ""):
        with pytest.raises(ValueError):
            Step.parse(bad, ground)
    assert Step(1, 0).is_legal((0, 0), (1, 0)) and not Step(1, 0).is_legal((1, 0), (1, 0))


def test_axiom_examples():
    star = enumerate_feasible(named("star"), "edge")
    assert check_two_step_axiom(star).ok
    bad = check_two_step_axiom(J((0, 0), (3, 0)))
    assert not bad.ok
    assert bad.counterexample["x"] == [0, 0] and bad.counterexample["y"] == [3, 0]
    assert bad.counterexample["x_prime"] == [1, 0]
    assert check_two_step_axiom(J((0, 0))).ok


def test_delta_matroid_examples():
    assert check_delta_matroid(enumerate_feasible(named("star"), "vertex")).ok
    assert check_delta_matroid(J((0, 0), (1, 1))).ok
    assert not check_delta_matroid(J((0, 0, 0), (1, 1, 1))).ok
    with pytest.raises(ValueError):
        check_delta_matroid(J((0, 0), (2, 0)))


def test_even_sum_examples():
    assert check_even_sum(enumerate_feasible(named("triangle"), "edge")).ok
    assert not check_even_sum(J((1, 0, 0))).ok
    assert check_even_sum(FiniteJumpSystem(("a",), frozenset())).ok


def test_box_validation():
    with pytest.raises(ValueError):
        FiniteJumpSystem(("a",), frozenset({(3,)}), (2,))
    with pytest.raises(ValueError):
        FiniteJumpSystem(("a",), frozenset({(1, 1)}))


small_sets = st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1)),
                     min_size=1, max_size=8)


@settings(max_examples=300)
@given(small_sets)
def test_axiom_matches_definition(vecs):
    assert check_two_step_axiom(J(*vecs)).ok == is_jump_system(vecs)


@settings(max_examples=300)
@given(st.sets(st.tuples(*[st.integers(0, 1)] * 3), min_size=1))
def test_delta_matroid_equals_axiom_on_01(vecs):
    # on 0-1 vectors symmetric exchange and the two-step axiom coincide
    assert check_delta_matroid(J(*vecs)).ok == check_two_step_axiom(J(*vecs)).ok


@given(small_sets)
def test_counterexample_is_genuine(vecs):
    v = check_two_step_axiom(J(*vecs))
    if not v.ok:
        x, y, x1 = (tuple(v.counterexample[k]) for k in ("x", "y", "x_prime"))
        assert x in vecs and y in vecs and x1 not in vecs
        assert all(s.apply(x1) not in vecs for s in steps_toward(x1, y) if s.delta)
