"""Tests for binomials, instances and run decomposition."""
import pytest
from hypothesis import given, strategies as st

from thetalab.core.combinat import (
    LSpec,
    binom,
    complement_L,
    complement_gap_lengths,
    complement_values,
    full_runs,
)
from thetalab.exceptions import SchemeError


def test_binom_values():
    assert binom(30, 15) == 155117520
    assert binom(5, -1) == 0
    assert binom(5, 6) == 0
    assert binom(0, 0) == 1


def test_binom_rejects_negative_upper_index():
    with pytest.raises(ValueError):
        binom(-1, 0)


def test_lspec_canonicalizes_L():
    spec = LSpec.of(10, 3, [2, 1, 1])
    assert spec.L == (1, 2)
    assert spec.s == 2
    assert spec.M == (0, 1, 2)
    assert spec.label() == "G(10,3,{1,2})"


@pytest.mark.parametrize("n,k,L", [(3, 3, []), (5, 0, []), (10, 3, [3]), (10, 3, [-1])])
def test_lspec_rejects_invalid(n, k, L):
    with pytest.raises(ValueError):
        LSpec.of(n, k, L)


def test_lspec_is_frozen():
    spec = LSpec.of(10, 3, [1])
    with pytest.raises(Exception):
        spec.n = 11


def test_require_scheme():
    assert LSpec.of(6, 3).require_scheme().n == 6
    with pytest.raises(SchemeError):
        LSpec.of(5, 3).require_scheme()


def test_full_runs():
    runs = full_runs([1, 3, 4, 7, 8, 9, 11])
    assert runs.b == 4
    assert runs.lengths == [1, 2, 3, 1]
    assert runs.flatten() == (1, 3, 4, 7, 8, 9, 11)
    assert full_runs([]).b == 0


def test_full_runs_requires_increasing():
    with pytest.raises(ValueError):
        full_runs([3, 1])


def test_complement():
    assert complement_values(5, [1, 3]) == (0, 2, 4)
    spec = LSpec.of(10, 4, [0, 3])
    assert complement_L(spec).L == (1, 2)


@given(st.integers(min_value=1, max_value=10).flatmap(
    lambda k: st.tuples(st.just(k), st.sets(st.integers(0, k - 1)))
))
def test_gap_lengths_of_complement_are_run_lengths(case):
    k, L = case
    assert complement_gap_lengths(k, L) == full_runs(sorted(L)).lengths


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=-2, max_value=62))
def test_binom_pascal_rule(n, r):
    assert binom(n, r) == binom(n - 1, r - 1) + binom(n - 1, r)


@given(st.integers(min_value=1, max_value=8).flatmap(
    lambda k: st.tuples(st.just(k), st.sets(st.integers(0, k - 1)))
))
def test_complement_is_an_involution(case):
    k, L = case
    spec = LSpec.of(2 * k + 1, k, L)
    assert complement_L(complement_L(spec)) == spec
