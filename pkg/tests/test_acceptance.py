"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is printed at the end of the run."""

import pytest

from cotangent.acceptance import CRITERIA

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, len(CRITERIA) + 1)])
def test_criterion(criterion):
    result = criterion()
    line = result.line()
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert result.ok, result.detail
    assert result.in_budget, f"{result.seconds:.1f}s exceeds the {result.budget:g}s budget"
