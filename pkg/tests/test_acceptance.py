"""Acceptance suite: one test per criterion, one printed line each.

Everything asserts exactly (zero tolerance).  Criterion 10 is a stretch
goal: its outcome is printed and reported but a failure there is recorded
as an expected-failure rather than a suite failure.
"""

import json

import pytest

from stackygit.acceptance import (
    check_calibration,
    check_decompositions,
    check_gerbe_indices,
    check_group_orders,
    check_klein_suite,
    check_quartic_invariants,
    check_quintic_locus,
    check_root_stack_law,
    check_sextic_divisor,
    check_symmetry_catalog,
)

SEED = 7


def _report(result):
    print(f"criterion {result.criterion:2d} [{result.status}] {result.name}")
    for line in result.details:
        print(f"    {line}")


def test_criterion_01_root_stack_law():
    result = check_root_stack_law()
    _report(result)
    assert result.passed


def test_criterion_02_gerbe_indices():
    result = check_gerbe_indices()
    _report(result)
    assert result.passed


def test_criterion_03_stacky_decompositions():
    result = check_decompositions()
    _report(result)
    assert result.passed


def test_criterion_04_group_orders():
    result = check_group_orders()
    _report(result)
    assert result.passed


def test_criterion_05_symmetry_catalog():
    result = check_symmetry_catalog()
    _report(result)
    assert result.passed


def test_criterion_06_klein_property_suite():
    result = check_klein_suite(seed=SEED)
    _report(result)
    assert result.passed


def test_criterion_07_quartic_invariants():
    result = check_quartic_invariants(seed=SEED)
    _report(result)
    assert result.passed


def test_criterion_08_quintic_locus():
    result = check_quintic_locus()
    _report(result)
    assert result.passed


def test_criterion_09_sextic_divisor():
    result = check_sextic_divisor()
    _report(result)
    assert result.passed


def test_criterion_10_calibration_stretch():
    result = check_calibration(seed=SEED)
    _report(result)
    assert not result.blocking
    if not result.passed:
        pytest.xfail("stretch goal: calibration reported a diagnostic")


def test_verify_all_is_deterministic():
    from stackygit.cli import run_command

    first = run_command(["verify-all", "--seed", str(SEED)])
    second = run_command(["verify-all", "--seed", str(SEED)])
    assert first.status == 0
    assert first.json_text() == second.json_text()
    payload = json.loads(first.json_text())
    assert payload["blocking_failures"] == 0
    assert len(payload["checks"]) == 10
