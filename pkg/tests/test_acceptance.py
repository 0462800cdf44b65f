"""Acceptance criteria A1-A10 at full size.

Each test prints one PASS/FAIL line. Runtime is a few minutes on one core;
set KPQ_MAX_WORKERS to spread the sweeps over more processes.
"""

import pytest

from kpq.verify import SUITES, VerifyConfig, run_criterion

ORDER = sorted(SUITES["all"], key=lambda c: int(c[1:]))


@pytest.mark.acceptance
@pytest.mark.parametrize("name", ORDER)
def test_criterion(name, capsys):
    res = run_criterion(name, VerifyConfig())
    with capsys.disabled():
        print("\n" + res.line())
    assert res.passed, res.line()
    assert res.within_limit, f"{name} took {res.seconds:.1f}s, limit {res.limit}s"
