"""Tests for the mod-q gap construction."""
from fractions import Fraction
from itertools import combinations

import pytest

from thetalab.exceptions import InputError
from thetalab.graphs.gap import gap_L, gap_edge, gap_report, gap_spec, prime_power
from thetalab.graphs.johnson import build_graph


@pytest.mark.parametrize("q,expected", [(2, (2, 1)), (7, (7, 1)), (8, (2, 3)), (9, (3, 2))])
def test_prime_power(q, expected):
    assert prime_power(q) == expected


@pytest.mark.parametrize("q", [1, 6, 12])
def test_not_prime_power(q):
    with pytest.raises(InputError):
        prime_power(q)


def test_derived_L():
    assert gap_L(2) == (0, 2)
    assert gap_L(3) == (0, 1, 3, 4, 6, 7)


def test_graph_matches_predicate():
    graph = build_graph(gap_spec(2, 7))
    for a, b in combinations(range(graph.num_vertices), 2):
        size = len(set(graph.vertices[a]) & set(graph.vertices[b]))
        assert graph.adjacent(a, b) == gap_edge(2, size)


def test_gap_needs_large_enough_n():
    with pytest.raises(InputError):
        gap_spec(2, 5)


def test_report_fields():
    report = gap_report(2, 50, include_alpha=False)
    assert report.k == 3
    assert report.minrank_bound == 50
    assert report.target_exponent == Fraction(1, 3)
    assert report.theta_complement * report.theta == report.N
    assert report.alpha is None
    assert report.sigma <= report.theta


def test_small_report_includes_alpha():
    report = gap_report(2, 7)
    assert report.alpha is not None
    assert report.alpha <= report.sigma


def test_exponent_trend_q2():
    estimates = [gap_report(2, n, include_alpha=False).exponent_estimate for n in (50, 100, 200, 400)]
    assert estimates[-1] > estimates[0]
    assert abs(estimates[-1] - 1 / 3) < 0.1


@pytest.mark.slow
def test_q3_report():
    report = gap_report(3, 50, include_alpha=False)
    assert len(report.L) == 6
    assert report.target_exponent == Fraction(1, 2)
    assert report.minrank_bound == 50 * 49 // 2
    assert report.theta > 0


def test_small_report_alpha_is_exact():
    assert gap_report(2, 7).alpha_exact is True


def test_alpha_budget_gives_lower_bound():
    report = gap_report(2, 7, alpha_budget=0)
    assert report.alpha_exact is False
    assert 1 <= report.alpha <= report.sigma


def test_skipped_alpha_has_no_exactness():
    report = gap_report(2, 50, include_alpha=False)
    assert report.alpha is None
    assert report.alpha_exact is None


def test_leading_ratio_approaches_one():
    distances = [abs(gap_report(2, n, include_alpha=False).leading_ratio - 1) for n in (100, 200, 400, 800)]
    assert distances[-1] < distances[0]
    assert distances[-1] < Fraction(5, 100)
