"""Acceptance criteria 1-10 on the full acceptance family.

Each test prints one PASS/FAIL line.  Findings (reduction divergences,
candidates against the integral-intersection conjecture) are reported but
never fail a criterion.
"""

import pytest

from tpathjump import battery

TIME_LIMIT = {1: 600.0, 2: 600.0}


@pytest.fixture
def report(capsys):
    def emit(res):
        with capsys.disabled():
            print("\n" + res.line())
            for f in res.failures:
                print("    failure:", f)
            for f in res.findings:
                print("    finding:", f)
    return emit


@pytest.mark.parametrize("number", sorted(battery.CRITERIA))
def test_criterion(number, report):
    res = battery.run_criterion(number, "acceptance", seed=0)
    report(res)
    assert res.checked > 0
    assert res.ok, res.failures
    if number in TIME_LIMIT:
        assert res.elapsed <= TIME_LIMIT[number]
