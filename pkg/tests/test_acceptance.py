"""Acceptance criteria at their stated tolerances and time budgets.

One PASS/FAIL line per criterion is printed in the terminal summary.
"""

import pytest

from bessel_dirichlet.acceptance import CRITERIA
from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("check", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(check):
    result = check()
    ACCEPTANCE_LINES.append(result.line())
    print(result.line())
    assert result.passed, result.line()
