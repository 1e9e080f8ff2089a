"""Eigenvalue data of the Johnson scheme on the k-subsets of [n]."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from threading import Lock
from typing import Tuple

from cachetools import LRUCache, cached

from thetalab.config import get_settings
from thetalab.core.combinat import LSpec, binom
from thetalab.exceptions import InputError, SchemeError
from thetalab.monitoring.metrics import SCHEME_BUILDS

logger = logging.getLogger(__name__)


def _check_scheme_range(n: int, k: int) -> None:
    if k < 1 or n < 2 * k:
        raise SchemeError(
            f"the Johnson scheme needs n >= 2k >= 2 (got n={n}, k={k})"
        )


def eigenvalue_P(n: int, k: int, i: int, u: int) -> int:
    """Eigenvalue P_i^u of the i-th scheme graph on the u-th eigenspace.

    P_i^u = sum_{j=0}^{i} (-1)^j C(u,j) C(k-u,i-j) C(n-k-u,i-j), with
    P_i^0 = nu_i.

    Args:
        n: Ground set size, n >= 2k.
        k: Subset size.
        i: Class index in [0, k].
        u: Eigenspace index in [0, k].

    Returns:
        The exact integer eigenvalue.
    """
    _check_scheme_range(n, k)
    if not (0 <= i <= k and 0 <= u <= k):
        raise InputError(f"eigenvalue_P indices out of range: i={i}, u={u}, k={k}")
    if u == 0:
        return binom(k, i) * binom(n - k, i)
    return sum(
        (-1) ** j * binom(u, j) * binom(k - u, i - j) * binom(n - k - u, i - j)
        for j in range(i + 1)
    )


def eigenvalue_leading_term(k: int, l: int, u: int) -> Tuple[Fraction, int]:
    """Leading coefficient and n-exponent of P_{k-l}^u as n grows.

    Returns:
        (coefficient, exponent) with P_{k-l}^u ~ coefficient * n^exponent.
    """
    if u < l:
        return Fraction(binom(k - u, k - l), factorial(k - l)), k - l
    sign = -1 if (u - l) % 2 else 1
    return Fraction(sign * binom(u, l), factorial(k - u)), k - u


@dataclass(frozen=True)
class SchemeTriple:
    """(nu, mu, P) tables of the Johnson scheme at (n, k).

    ``P[i][u]`` holds P_i^u for i, u in [0, k].
    """
    n: int
    k: int
    nu: Tuple[int, ...]
    mu: Tuple[int, ...]
    P: Tuple[Tuple[int, ...], ...]

    def Q(self, i: int, u: int) -> Fraction:
        """Dual eigenvalue Q_i^u = mu_u P_i^u / nu_i."""
        return Fraction(self.mu[u] * self.P[i][u], self.nu[i])

    def orthogonality_sum(self, i: int) -> Fraction:
        """sum_u mu_u (P_i^u)^2 / nu_i; equals C(n, k) for every i."""
        return Fraction(
            sum(self.mu[u] * self.P[i][u] ** 2 for u in range(self.k + 1)),
            self.nu[i],
        )


@cached(cache=LRUCache(maxsize=get_settings().scheme_cache_size), lock=Lock())
def build_scheme(n: int, k: int) -> SchemeTriple:
    """Build (and cache) the full eigenvalue tables at (n, k).

    Args:
        n: Ground set size.
        k: Subset size; requires n >= 2k >= 2.

    Returns:
        Immutable SchemeTriple.
    """
    _check_scheme_range(n, k)
    SCHEME_BUILDS.inc()
    logger.debug(f"Building Johnson scheme tables for n={n}, k={k}")

    nu = tuple(binom(k, i) * binom(n - k, i) for i in range(k + 1))
    mu = tuple(binom(n, u) - binom(n, u - 1) for u in range(k + 1))
    P = tuple(
        tuple(eigenvalue_P(n, k, i, u) for u in range(k + 1))
        for i in range(k + 1)
    )
    return SchemeTriple(n=n, k=k, nu=nu, mu=mu, P=P)


@dataclass(frozen=True)
class PMatrix:
    """The s x s matrix with (i, j) entry P_{k - l_j}^{l_i + 1}."""
    spec: LSpec
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def rows(self):
        return [list(row) for row in self.entries]


def build_P_matrix(spec: LSpec) -> PMatrix:
    """Assemble P for the instance: rows at u = l_i + 1, columns at k - l_j."""
    spec.require_scheme()
    if spec.s == 0:
        raise InputError("the matrix P needs |L| >= 1")
    scheme = build_scheme(spec.n, spec.k)
    entries = tuple(
        tuple(scheme.P[spec.k - l_j][l_i + 1] for l_j in spec.L)
        for l_i in spec.L
    )
    return PMatrix(spec=spec, entries=entries)
