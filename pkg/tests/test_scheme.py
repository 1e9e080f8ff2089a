"""Tests for Johnson scheme eigenvalue tables."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thetalab.core.combinat import LSpec, binom
from thetalab.core.scheme import (
    build_P_matrix,
    build_scheme,
    eigenvalue_P,
    eigenvalue_leading_term,
)
from thetalab.exceptions import InputError, SchemeError

scheme_sizes = st.integers(min_value=1, max_value=6).flatmap(
    lambda k: st.tuples(st.integers(min_value=2 * k, max_value=2 * k + 15), st.just(k))
)


def test_eigenvalue_example():
    assert eigenvalue_P(10, 3, 1, 1) == 11


def test_small_scheme():
    scheme = build_scheme(4, 2)
    assert scheme.nu == (1, 4, 1)
    assert scheme.mu == (1, 3, 2)


def test_scheme_requires_n_at_least_2k():
    with pytest.raises(SchemeError):
        build_scheme(5, 3)


def test_eigenvalue_index_range():
    with pytest.raises(InputError):
        eigenvalue_P(10, 3, 4, 0)


@given(scheme_sizes)
def test_multiplicities_and_valencies_sum_to_vertex_count(size):
    n, k = size
    scheme = build_scheme(n, k)
    assert sum(scheme.mu) == binom(n, k)
    assert sum(scheme.nu) == binom(n, k)


@given(scheme_sizes)
def test_nontrivial_eigenvalues_of_all_classes_sum_to_zero(size):
    n, k = size
    scheme = build_scheme(n, k)
    for u in range(1, k + 1):
        assert sum(scheme.P[i][u] for i in range(k + 1)) == 0


@given(scheme_sizes)
def test_orthogonality(size):
    n, k = size
    scheme = build_scheme(n, k)
    for i in range(k + 1):
        assert scheme.orthogonality_sum(i) == binom(n, k)


def test_leading_terms():
    # P_2^2 = -2n + 11 at k = 3
    assert eigenvalue_leading_term(3, 1, 2) == (Fraction(-2), 1)
    # P_1^0 = nu_1 = 3(n - 3)
    assert eigenvalue_leading_term(3, 2, 0) == (Fraction(3), 1)


def test_P_matrix():
    assert build_P_matrix(LSpec.of(12, 3, [1])).entries == ((-13,),)
    with pytest.raises(InputError):
        build_P_matrix(LSpec.of(12, 3, []))


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_eigenvalues_approach_leading_term(k):
    for l in range(k):
        for u in range(k + 1):
            coefficient, exponent = eigenvalue_leading_term(k, l, u)
            errors = []
            for n in (10**3, 10**4, 10**5):
                ratio = eigenvalue_P(n, k, k - l, u) / (coefficient * Fraction(n) ** exponent)
                errors.append(abs(ratio - 1))
            assert errors[2] <= errors[1] <= errors[0]
            assert errors[2] <= errors[0] / 20
            assert errors[2] < Fraction(1, 100)
