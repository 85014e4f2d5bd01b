"""Acceptance gate: every published criterion, one pass/fail line each."""

import pytest

from multisums.acceptance import criterion_titles, run_all

TITLES = criterion_titles()


@pytest.fixture(scope="session")
def all_results():
    return run_all()


@pytest.mark.parametrize("number", sorted(TITLES))
def test_criterion(all_results, number):
    result = next(r for r in all_results if r.number == number)
    assert result.passed, f"criterion {number} ({result.title}): {result.detail}"


def test_whole_suite_under_a_minute(all_results):
    total = sum(r.seconds for r in all_results)
    assert total < 60.0, f"acceptance suite took {total:.1f}s"


def test_every_criterion_present(all_results):
    assert [r.number for r in all_results] == sorted(TITLES)
    assert len(TITLES) == 10
