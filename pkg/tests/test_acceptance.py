"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line
with its runtime against the stated budget.

Run with -s to see the lines as they complete; the same checks back the
CLI `vantage verify` subcommand.
"""

import pytest

from vantage.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize(
    "number,name,budget",
    [(num, name, budget) for num, name, _, budget in CRITERIA],
    ids=[f"criterion_{num}_{name.replace(' ', '_')}"
         for num, name, _, _ in CRITERIA],
)
def test_criterion(number, name, budget):
    result = run_criterion(number)
    status = "PASS" if result.passed else "FAIL"
    print(f"[{status}] criterion {number} ({name}): {result.detail} "
          f"({result.elapsed:.1f}s / budget {budget:.0f}s)")
    assert result.passed, result.detail
