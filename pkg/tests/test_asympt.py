"""Tests for the closed forms and the explicit feasible point."""
from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from thetalab.asympt.feasible import detP_check, feasible_leading_coefficients, feasible_solution
from thetalab.asympt.formulas import (
    factorial_identity,
    cosingleton_leading,
    def_bound,
    def_structure,
    exact_theta_cosingleton,
    exact_theta_singleton,
    leading_constant,
    rcw_bound,
    schrijver_alternative,
    singleton_slope,
)
from thetalab.core.combinat import LSpec, binom, complement_values
from thetalab.exceptions import InputError
from thetalab.lp.theta_lp import theta


@pytest.mark.parametrize("k,L,expected", [
    (3, [1], Fraction(3, 4)),
    (3, [0, 2], Fraction(2, 9)),
    (3, [1, 2], Fraction(1, 2)),
    (2, [0], Fraction(1, 2)),
])
def test_leading_constant(k, L, expected):
    term = leading_constant(k, L)
    assert term.constant == expected
    assert term.exponent == len(L)


def test_leading_constant_needs_nonempty_L():
    with pytest.raises(InputError):
        leading_constant(3, [])


@given(st.integers(min_value=1, max_value=8).flatmap(
    lambda k: st.tuples(st.just(k), st.integers(0, k - 1))
))
def test_leading_constant_of_interval_matches_binomial(case):
    k, t = case
    assert leading_constant(k, range(t, k)).constant == Fraction(1, factorial(k - t))


def test_factorial_identity_exhaustive():
    for k in range(1, 11):
        for size in range(k + 1):
            for L in combinations(range(k), size):
                assert factorial_identity(k, L) == Fraction(1, factorial(k))


def test_singleton_closed_form():
    assert exact_theta_singleton(12, 3, 1) == Fraction(121, 13)
    assert exact_theta_cosingleton(12, 3, 1) == Fraction(2860, 121)
    assert exact_theta_singleton(12, 3, 1) == theta(LSpec.of(12, 3, [1]))


@given(st.integers(min_value=1, max_value=6).flatmap(
    lambda k: st.tuples(st.integers(min_value=2 * k, max_value=80), st.just(k))
))
def test_singleton_top_value_is_ekr(case):
    n, k = case
    assert exact_theta_singleton(n, k, k - 1) == n - k + 1


def test_singleton_and_cosingleton_multiply_to_vertex_count():
    for k in range(1, 6):
        for l in range(k):
            n = 40
            product = exact_theta_singleton(n, k, l) * exact_theta_cosingleton(n, k, l)
            assert product == binom(n, k)


def test_slopes():
    assert singleton_slope(3, 1) == Fraction(3, 4)
    for k in range(1, 7):
        for l in range(k):
            rest = complement_values(k, [l])
            if rest:
                assert cosingleton_leading(k, l) == leading_constant(k, rest).constant


def test_singleton_slope_at_large_n():
    value = exact_theta_singleton(10**6, 4, 1) / 10**6
    assert abs(value - singleton_slope(4, 1)) / singleton_slope(4, 1) < Fraction(1, 1000)


def test_def_and_rcw():
    bound = def_bound(LSpec.of(100, 3, [1]))
    assert bound.value == Fraction(99, 2)
    assert bound.threshold == 216
    assert not bound.valid
    assert def_bound(LSpec.of(300, 3, [1])).valid
    assert def_bound(LSpec.of(10, 3, [])).value == 1
    assert rcw_bound(LSpec.of(10, 3, [0, 1])) == 45
    assert rcw_bound(LSpec.of(10, 3, [])) == 1


def test_def_of_interval_is_binomial():
    for t in range(4):
        spec = LSpec.of(20, 4, range(t, 4))
        assert def_bound(spec).value == binom(20 - t, 4 - t)


def test_def_below_rcw_when_valid():
    spec = LSpec.of(300, 3, [0, 1])
    assert def_bound(spec).valid
    assert def_bound(spec).value <= rcw_bound(spec)


def test_def_structure():
    assert def_structure(LSpec.of(50, 7, [1, 3, 5])).divisibility_chain
    assert def_structure(LSpec.of(50, 7, [0, 1, 3])).divisibility_chain
    assert not def_structure(LSpec.of(50, 7, [0, 2, 3])).divisibility_chain
    assert def_structure(LSpec.of(50, 3, [1])).intersection_threshold == 9


def test_schrijver_alternative():
    result = schrijver_alternative(LSpec.of(12, 3, [1]))
    assert result.def_value == Fraction(11, 2)
    assert result.counterexample_candidate
    assert result.complement_within
    assert result.holds


def test_detP_singleton():
    check = detP_check(LSpec.of(12, 3, [1]))
    assert check.det == -13
    assert check.predicted_leading == -2
    assert check.exponent == 1


def test_detP_two_element_run():
    # det P = 3n - 12 for k = 3, L = {1, 2}
    check = detP_check(LSpec.of(20, 3, [1, 2]))
    assert check.det == 48
    assert check.predicted_leading == 3
    assert check.exponent == 1
    assert Fraction(9, 10) <= detP_check(LSpec.of(1000, 3, [1, 2])).ratio <= Fraction(11, 10)


def test_detP_exponent():
    assert detP_check(LSpec.of(20, 4, [1, 2])).exponent == 3


@pytest.mark.parametrize("k,L", [(3, [1]), (4, [1, 2]), (4, [0, 2])])
def test_detP_ratio_approaches_one(k, L):
    assert Fraction(99, 100) <= detP_check(LSpec.of(10**5, k, L)).ratio <= Fraction(101, 100)


def test_feasible_point_singleton():
    point = feasible_solution(LSpec.of(12, 3, [1]))
    assert point.values == (Fraction(108, 13),)
    assert point.objective == Fraction(121, 13)
    assert point.feasible
    assert 2 in point.tight_rows
    assert point.assignment == {2: Fraction(108, 13)}


def test_feasible_point_below_theta():
    for n in range(20, 41, 5):
        spec = LSpec.of(n, 3, [1, 2])
        point = feasible_solution(spec)
        if point.feasible:
            assert point.objective <= theta(spec)


def test_feasible_point_violation_at_small_n():
    point = feasible_solution(LSpec.of(6, 3, [1]))
    assert not point.feasible
    assert 1 in point.violated_rows


def test_feasible_leading_coefficients():
    assert feasible_leading_coefficients(3, [1]) == [(Fraction(3, 4), 1)]
    # a_2 ~ n^2 / 2 and a_1 ~ 2n for k = 3, L = {1, 2}
    assert feasible_leading_coefficients(3, [1, 2]) == [(Fraction(1, 2), 2), (Fraction(2), 1)]
    terms = feasible_leading_coefficients(5, [0, 1, 3])
    assert terms[0][0] == leading_constant(5, [0, 1, 3]).constant
    assert all(c > 0 for c, _ in terms)


@pytest.mark.parametrize("k,L", [(3, [1]), (4, [1, 2]), (4, [0, 2])])
def test_feasible_point_follows_its_leading_terms(k, L):
    terms = feasible_leading_coefficients(k, L)
    errors = []
    for n in (10**3, 10**5):
        point = feasible_solution(LSpec.of(n, k, L))
        errors.append(max(
            abs(a / (C * Fraction(n) ** e) - 1) for a, (C, e) in zip(point.values, terms)
        ))
    assert errors[1] < errors[0]
    assert errors[1] < Fraction(1, 100)
