"""Closed forms: leading constants, |L| = 1 values, DEF and RCW bounds."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Callable, Iterable, Tuple

from thetalab.core.combinat import LSpec, binom, complement_L, complement_values, full_runs
from thetalab.exceptions import FormulaDomainError, InputError
from thetalab.lp.theta_lp import theta

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LeadingTerm:
    """theta(G(n,k,L)) = constant * n^exponent + O(n^(exponent-1))."""
    constant: Fraction
    exponent: int
    run_product: Fraction


def _normalize(k: int, L: Iterable[int]) -> Tuple[int, ...]:
    values = tuple(sorted(set(L)))
    if k < 1 or any(l < 0 or l > k - 1 for l in values):
        raise InputError(f"L={list(values)} is not a subset of [0, {k - 1}]")
    return values


def chain_binomial(k: int, L: Iterable[int]) -> int:
    """C(k, k-l_1) * C(k-l_1-1, k-l_2) * ... * C(k-l_{s-1}-1, k-l_s)."""
    values = _normalize(k, L)
    if not values:
        return 1
    result = binom(k, k - values[0])
    for prev, cur in zip(values, values[1:]):
        result *= binom(k - prev - 1, k - cur)
    return result


def run_factorial_product(L: Iterable[int]) -> int:
    """Product of m_i! over the full runs of L."""
    return prod(factorial(m) for m in full_runs(sorted(set(L))).lengths)


def _leading_value(k: int, values: Tuple[int, ...]) -> Fraction:
    # Empty L contributes the empty product 1.
    denominator = prod((l + 1) * (k - l) for l in values)
    return Fraction(run_factorial_product(values) * chain_binomial(k, values), denominator)


def leading_constant(k: int, L: Iterable[int]) -> LeadingTerm:
    """Coefficient of n^|L| in theta(G(n, k, L)).

    Args:
        k: Subset size.
        L: Nonempty subset of [0, k-1].

    Returns:
        LeadingTerm with exponent |L|.
    """
    values = _normalize(k, L)
    if not values:
        raise InputError("leading_constant needs |L| >= 1")
    return LeadingTerm(
        constant=_leading_value(k, values),
        exponent=len(values),
        run_product=Fraction(run_factorial_product(values)),
    )


def factorial_identity(k: int, L: Iterable[int]) -> Fraction:
    """Leading constant of L times that of its complement; always 1/k!."""
    values = _normalize(k, L)
    return _leading_value(k, values) * _leading_value(k, complement_values(k, values))


def singleton_slope(k: int, l: int) -> Fraction:
    """theta(G(n,k,{l})) / n as n grows: C(k,k-l) / ((k-l)(l+1))."""
    return Fraction(binom(k, k - l), (k - l) * (l + 1))


def cosingleton_leading(k: int, l: int) -> Fraction:
    """Coefficient of n^(k-1) in theta(G(n,k,[0,k-1] \\ {l}))."""
    return Fraction((l + 1) * (k - l), factorial(k) * binom(k, k - l))


def singleton_denominator(n: int, k: int, l: int) -> int:
    """sum_{j=0}^{k-l} (-1)^{j+1} C(l+1,j) C(k-l-1,k-l-j) C(n-k-l-1,k-l-j).

    Equals -P_{k-l}^{l+1}.
    """
    top = n - k - l - 1
    if top < 0:
        raise FormulaDomainError(
            f"singleton formula undefined at n={n}, k={k}, l={l} (n-k-l-1 < 0)"
        )
    return sum(
        (-1) ** (j + 1) * binom(l + 1, j) * binom(k - l - 1, k - l - j) * binom(top, k - l - j)
        for j in range(k - l + 1)
    )


def exact_theta_singleton(n: int, k: int, l: int) -> Fraction:
    """Closed-form theta for L = {l}, exact at every n where it is defined.

    Raises:
        FormulaDomainError: zero denominator or n too small.
    """
    if not (n > k > l >= 0):
        raise InputError(f"need n > k > l >= 0, got n={n}, k={k}, l={l}")
    denominator = singleton_denominator(n, k, l)
    if denominator == 0:
        raise FormulaDomainError(f"singleton formula has zero denominator at n={n}, k={k}, l={l}")
    return 1 + Fraction(binom(k, k - l) * binom(n - k, k - l), denominator)


def exact_theta_cosingleton(n: int, k: int, l: int) -> Fraction:
    """C(n,k) / exact_theta_singleton(n, k, l)."""
    return Fraction(binom(n, k)) / exact_theta_singleton(n, k, l)


@dataclass(frozen=True)
class DefBound:
    """Deza-Erdos-Frankl product bound and whether n is in its proven range."""
    value: Fraction
    valid: bool
    threshold: int


def def_bound(spec: LSpec) -> DefBound:
    """prod_{l in L} (n-l)/(k-l); proven for n > 2^k k^3."""
    value = prod((Fraction(spec.n - l, spec.k - l) for l in spec.L), start=Fraction(1))
    threshold = 2 ** spec.k * spec.k ** 3
    return DefBound(value=value, valid=spec.n > threshold, threshold=threshold)


def rcw_bound(spec: LSpec) -> int:
    """Ray-Chaudhuri-Wilson bound C(n, |L|)."""
    return binom(spec.n, spec.s)


@dataclass(frozen=True)
class DefStructure:
    """Structural side conditions accompanying the DEF bound.

    A family larger than ``intersection_threshold`` has a common
    intersection of size >= l_1; one larger than ``divisibility_threshold``
    (s >= 2) forces the divisibility chain.
    """
    divisibility_chain: bool
    intersection_threshold: int
    divisibility_threshold: int


def def_structure(spec: LSpec) -> DefStructure:
    """Check (l_2-l_1) | (l_3-l_2) | ... | (k-l_s) and report the size thresholds."""
    s, k, n = spec.s, spec.k, spec.n
    steps = [b - a for a, b in zip(spec.L, spec.L[1:])]
    if spec.L:
        steps.append(k - spec.L[-1])
    chain = all(b % a == 0 for a, b in zip(steps, steps[1:]))
    power = n ** (s - 1) if s >= 1 else 1
    return DefStructure(
        divisibility_chain=chain,
        intersection_threshold=2 ** max(s - 1, 0) * k ** 2 * power,
        divisibility_threshold=2 ** k * k ** 2 * power,
    )


@dataclass(frozen=True)
class SchrijverAlternative:
    """theta vs DEF for L and for L^C at one n.

    The product identity forces at least one of the two comparisons to hold.
    """
    theta: Fraction
    def_value: Fraction
    theta_complement: Fraction
    def_complement: Fraction

    @property
    def within(self) -> bool:
        return self.theta <= self.def_value

    @property
    def complement_within(self) -> bool:
        return self.theta_complement <= self.def_complement

    @property
    def holds(self) -> bool:
        return self.within or self.complement_within

    @property
    def counterexample_candidate(self) -> bool:
        """theta exceeds the DEF product for L itself."""
        return not self.within


def schrijver_alternative(
    spec: LSpec, theta_fn: Callable[[LSpec], Fraction] = theta
) -> SchrijverAlternative:
    """Compare theta with the DEF product for L and L^C."""
    other = complement_L(spec)
    return SchrijverAlternative(
        theta=theta_fn(spec),
        def_value=def_bound(spec).value,
        theta_complement=theta_fn(other),
        def_complement=def_bound(other).value,
    )
