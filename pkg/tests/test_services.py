"""Tests for sweeps, thresholds and the identity suites."""
from fractions import Fraction

import pytest

from thetalab.core.combinat import LSpec, binom
from thetalab.exceptions import InputError, SchemeError
from thetalab.lp.theta_lp import sigma, theta
from thetalab.services.sweep import run_sweep, sweep_ns
from thetalab.services.thresholds import feasibility_threshold, singleton_threshold
from thetalab.services.verification import (
    ekr_suite,
    factorial_suite,
    feasible_suite,
    product_suite,
    run_verification,
    schrijver_suite,
    singleton_suite,
)


def test_sweep_points():
    assert sweep_ns(6, 10, step=2) == [6, 8, 10]
    points = sweep_ns(6, 200, samples=8)
    assert points[0] == 6 and points[-1] == 200
    assert points == sorted(set(points))


def test_sweep_points_reject_empty_range():
    with pytest.raises(InputError):
        sweep_ns(10, 6)
    with pytest.raises(InputError):
        sweep_ns(6, 10, samples=-2)


def test_sweep_rows_in_order():
    table = run_sweep(3, [1], [9, 6, 12], workers=3)
    assert [row.n for row in table.rows] == [9, 6, 12]
    assert table.constant == Fraction(3, 4)
    row = table.rows[2]
    assert row.theta == theta(LSpec.of(12, 3, [1]))
    assert row.sigma == sigma(LSpec.of(12, 3, [1]))
    assert row.leading == 9
    assert row.residual == Fraction(121, 13) - 9


def test_sweep_residual_is_bounded():
    table = run_sweep(4, [1, 2], sweep_ns(8, 200, samples=10))
    low, high = table.residual_range
    assert high - low == table.spread
    assert abs(low) < 200 and abs(high) < 200


def test_sweep_rejects_bad_input():
    with pytest.raises(InputError):
        run_sweep(3, [], [6])
    with pytest.raises(SchemeError):
        run_sweep(3, [1], [5])


def test_singleton_threshold():
    found = singleton_threshold(3, 1, 20)
    assert found.n0 == 7
    assert found.failures == [6]


def test_feasibility_threshold():
    assert feasibility_threshold(3, [1], 20).n0 == 7


def test_suites_pass():
    assert factorial_suite(8).passed
    assert ekr_suite(3).passed
    assert product_suite(3).passed
    result = singleton_suite(3, n_max=20)
    assert result.passed
    assert result.details["k=3,l=1"] == "7"


def test_full_verification_passes():
    report = run_verification(3)
    assert report.passed
    assert [r.name for r in report.results] == ["factorial", "ekr", "product", "singleton", "schrijver", "feasible"]


def test_corrupted_solver_is_caught():
    def corrupted(spec):
        bump = 1 if (spec.k, spec.L) == (3, (1, 2)) else 0
        return theta(spec) + bump

    report = run_verification(3, theta_fn=corrupted)
    assert not report.passed
    ekr = next(r for r in report.results if r.name == "ekr")
    assert ekr.failures


def test_schrijver_suite_records_candidates():
    result = schrijver_suite(3)
    assert result.passed
    assert int(result.details["counterexample_candidates"]) >= 0


def test_schrijver_suite_catches_inflated_theta():
    def inflated(spec):
        return Fraction(binom(spec.n, spec.k) + 1)

    result = schrijver_suite(2, theta_fn=inflated)
    assert not result.passed


def test_feasible_suite_records_thresholds():
    result = feasible_suite(3, n_max=20)
    assert result.passed
    assert result.details["k=3,L=[1]"] == "7"
