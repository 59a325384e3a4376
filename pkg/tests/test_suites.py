"""Every named verification suite passes for both reference tables."""

import pytest

from twograph.suites import SUITE_NAMES, run_suite


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_suite_passes(theta, name):
    reports = run_suite(name, theta, seed=7, level=(2, 2), samples=10,
                        float_tol=1e-9)
    for report in reports:
        for case in report.cases:
            assert case.passed, f"{report.name}.{case.case_id}: {case.detail}"


def test_all_expands_to_every_suite(flip22):
    reports = run_suite("all", flip22, seed=1, level=(1, 1), samples=2,
                        float_tol=1e-9)
    assert [r.name for r in reports] == list(SUITE_NAMES)


def test_unknown_suite_rejected(flip22):
    with pytest.raises(ValueError):
        run_suite("everything", flip22, 0, (1, 1), 1, 1e-9)


def test_reports_are_deterministic(id23):
    first = run_suite("modular", id23, seed=5, level=(1, 1), samples=5,
                      float_tol=1e-9)
    second = run_suite("modular", id23, seed=5, level=(1, 1), samples=5,
                       float_tol=1e-9)
    assert [(c.case_id, c.passed, c.detail) for r in first for c in r.cases] == \
        [(c.case_id, c.passed, c.detail) for r in second for c in r.cases]
