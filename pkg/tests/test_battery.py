import pytest

from tpathjump import battery
from tpathjump.jump import Verdict


def test_named_preset_passes():
    results = battery.run_suite("named", criteria=[1, 2, 3, 5, 6, 9])
    assert [r.number for r in results] == [1, 2, 3, 5, 6, 9]
    assert all(r.ok for r in results), [r.failures for r in results]
    assert all(r.checked > 0 for r in results)


def test_failures_are_reported(monkeypatch):
    monkeypatch.setattr(battery, "check_two_step_axiom", lambda J: Verdict(False, {"x": [1]}))
    res = battery.run_criterion(1, "named")
    assert not res.ok and len(res.failures) == battery.MAX_LISTED
    assert "FAIL" in res.line()


def test_findings_do_not_fail():
    res = battery.run_criterion(10, "named")
    assert res.ok and res.finding_count > 0
    assert sum(res.detail["divergences_by_mode"].values()) == res.finding_count
    d = res.to_dict(timing=False)
    assert "elapsed" not in d and d["finding_count"] == res.finding_count


def test_random_points_are_seeded():
    import random
    from fractions import Fraction

    verts = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))]
    a = battery._random_points(random.Random("x"), verts, 20)
    b = battery._random_points(random.Random("x"), verts, 20)
    assert a == b and len(a) == 20


def test_unknown_preset():
    with pytest.raises(KeyError):
        battery.family("nope")
