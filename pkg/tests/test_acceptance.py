"""Acceptance criteria at their stated tolerances and time budgets.

Each criterion prints one ``[PASS]``/``[FAIL]`` line, collected again in the
terminal summary.
"""

import pytest

from monopole_index.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion, record_criterion):
    result = criterion()
    print(result.line())
    record_criterion(result)
    assert result.passed, result.line()
    assert result.elapsed < result.budget, result.line()
