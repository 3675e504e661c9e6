import pytest
from hypothesis import given, settings, strategies as st

from tpathjump.exchange import (FIRST, SECOND, ExchangeError, _Route, _shortcut, certify,
                                exchange_step_edge, exchange_step_generic)
from tpathjump.families import named
from tpathjump.jump import Step, steps_toward
from tpathjump.packing import enumerate_feasible, realize
from tpathjump.paths import PathSystem, TPath, demand_of, enumerate_t_paths

from strategies import multigraphs

STAR = named("star")


def _sys(g, m):
    return realize(g, "edge", m)


def test_star_delete_then_add():
    P1, P2 = _sys(STAR, (1, 1, 0)), _sys(STAR, (0, 1, 1))
    r = exchange_step_edge(STAR, P1, P2, Step(-1, 0))
    assert (r.outcome, r.step, r.vector) == (SECOND, Step(1, 2), (0, 1, 1))
    assert [str(p) for p in r.system] == ["b-v-c"]
    assert [t["action"] for t in r.trace] == ["delete-and-recurse", "add"]
    assert certify(STAR, (1, 1, 0), (0, 1, 1), Step(-1, 0), r)


def test_star_reroute():
    P1, P2 = _sys(STAR, (1, 1, 0)), _sys(STAR, (0, 1, 1))
    r = exchange_step_edge(STAR, P1, P2, Step(1, 2))
    assert (r.outcome, r.step) == (SECOND, Step(-1, 0))
    assert [str(p) for p in r.system] == ["b-v-c"]
    (rec,) = r.trace
    assert rec["action"] == "reroute" and rec["shared_edge"] == 1


def test_stay_is_first_step():
    P1 = _sys(STAR, (1, 1, 0))
    r = exchange_step_edge(STAR, P1, P1, Step(0))
    assert r.outcome == FIRST and r.system == P1


def test_generic_examples():
    r = exchange_step_generic(STAR, "vertex", (1, 1, 0), (0, 1, 1), Step(-1, 0))
    assert (r.outcome, r.step, r.vector) == (SECOND, Step(1, 2), (0, 1, 1))
    assert exchange_step_generic(STAR, "edge", (1, 1, 0), (1, 1, 0), Step(0)).outcome == FIRST
    t = named("triangle")
    r = exchange_step_generic(t, "edge", (2, 2, 2), (0, 0, 0), Step(-1, 0))
    assert r.outcome == SECOND and r.vector in {(1, 1, 2), (1, 2, 1)}
    assert certify(t, (2, 2, 2), (0, 0, 0), Step(-1, 0), r)


def test_input_errors():
    P1, P2 = _sys(STAR, (1, 1, 0)), _sys(STAR, (0, 1, 1))
    with pytest.raises(ExchangeError):
        exchange_step_edge(STAR, P1, P2, Step(1, 0))
    bad = PathSystem(tuple(enumerate_t_paths(STAR)[:2]))
    with pytest.raises(ExchangeError, match="not valid"):
        exchange_step_edge(STAR, bad, P2, Step(0))
    with pytest.raises(ExchangeError, match="edge-disjoint"):
        exchange_step_edge(STAR, PathSystem(P1.paths, "vertex"), P2, Step(0))
    with pytest.raises(ExchangeError, match="not feasible"):
        exchange_step_generic(STAR, "edge", (1, 1, 1), (0, 0, 0), Step(-1, 0))


def test_certify_rejects_wrong_results():
    P1, P2 = _sys(STAR, (1, 1, 0)), _sys(STAR, (0, 1, 1))
    r = exchange_step_edge(STAR, P1, P2, Step(-1, 0))
    from dataclasses import replace

    assert not certify(STAR, (1, 1, 0), (0, 1, 1), Step(-1, 0), replace(r, step=Step(-1, 1)))
    assert not certify(STAR, (1, 1, 0), (0, 1, 1), Step(-1, 0), replace(r, system=P1))
    assert not certify(STAR, (1, 1, 0), (0, 1, 1), Step(-1, 0), replace(r, outcome=FIRST))


def test_shortcut_removes_cycles():
    # a-x-y-z-x-b: the closed walk x-y-z-x is dropped
    r = _Route(("a", "x", "y", "z", "x", "b"), (0, 1, 2, 3, 4))
    assert _shortcut(r) == TPath(("a", "x", "b"), (0, 4))
    r = _Route(("a", "x", "y", "x", "z", "y", "b"), (0, 1, 2, 3, 4, 5))
    assert _shortcut(r) == TPath(("a", "x", "z", "y", "b"), (0, 3, 4, 5))
    assert _shortcut(_Route(("a", "b"), (7,))) == TPath(("a", "b"), (7,))


def _random_system(g, data):
    """A random edge-disjoint T-path system (not necessarily what realize returns)."""
    paths = enumerate_t_paths(g)
    order = data.draw(st.permutations(range(len(paths)))) if paths else []
    chosen, used = [], set()
    for k in order:
        p = paths[k]
        if not used & set(p.edges) and data.draw(st.booleans()):
            chosen.append(p)
            used |= set(p.edges)
    return PathSystem(tuple(chosen), "edge")


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_vertices=5, max_edges=7), st.data())
def test_edge_exchange_on_arbitrary_systems(g, data):
    P1, P2 = _random_system(g, data), _random_system(g, data)
    m1, m2 = demand_of(P1, g.terminals), demand_of(P2, g.terminals)
    for sigma in steps_toward(m1, m2):
        r = exchange_step_edge(g, P1, P2, sigma)
        assert certify(g, m1, m2, sigma, r)
        params = [t["parameter"] for t in r.trace]
        assert params == sorted(set(params), reverse=True)


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_vertices=5, max_edges=6))
def test_generic_and_edge_agree(g):
    J = enumerate_feasible(g, "edge")
    for m1 in J:
        for m2 in J:
            for sigma in steps_toward(m1, m2):
                gen = exchange_step_generic(g, "edge", m1, m2, sigma)
                assert certify(g, m1, m2, sigma, gen)
                con = exchange_step_edge(g, realize(g, "edge", m1), realize(g, "edge", m2), sigma)
                if con.outcome == FIRST:
                    assert gen.outcome == FIRST


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_vertices=5, max_edges=6))
def test_generic_vertex_mode_certified(g):
    J = enumerate_feasible(g, "vertex")
    for m1 in J:
        for m2 in J:
            for sigma in steps_toward(m1, m2):
                r = exchange_step_generic(g, "vertex", m1, m2, sigma)
                assert certify(g, m1, m2, sigma, r, "vertex")
