"""Empirical thresholds n0 beyond which asymptotic statements hold exactly."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, List, Optional

from thetalab.asympt.feasible import feasible_solution
from thetalab.asympt.formulas import exact_theta_singleton
from thetalab.core.combinat import LSpec
from thetalab.exceptions import FormulaDomainError, SingularMatrixError
from thetalab.lp.theta_lp import theta

logger = logging.getLogger(__name__)


@dataclass
class Threshold:
    """Smallest n0 with the property holding on all of [n0, n_max].

    ``n0`` is None when the property fails at n_max itself.
    """
    k: int
    L: tuple
    n_max: int
    n0: Optional[int] = None
    failures: List[int] = field(default_factory=list)


def _suffix_threshold(ok_by_n: List[tuple]) -> Optional[int]:
    n0 = None
    for n, ok in reversed(ok_by_n):
        if not ok:
            break
        n0 = n
    return n0


def singleton_threshold(
    k: int, l: int, n_max: int, theta_fn: Callable[[LSpec], Fraction] = theta
) -> Threshold:
    """Where the LP value of G(n,k,{l}) starts matching the closed form."""
    checks = []
    for n in range(2 * k, n_max + 1):
        try:
            ok = theta_fn(LSpec.of(n, k, [l])) == exact_theta_singleton(n, k, l)
        except FormulaDomainError:
            ok = False
        checks.append((n, ok))
    result = Threshold(
        k=k,
        L=(l,),
        n_max=n_max,
        n0=_suffix_threshold(checks),
        failures=[n for n, ok in checks if not ok],
    )
    logger.debug(f"singleton threshold k={k} l={l}: n0={result.n0}")
    return result


def feasibility_threshold(k: int, L: Iterable[int], n_max: int) -> Threshold:
    """Where the explicit P^{-1} point becomes LP-feasible."""
    values = tuple(sorted(set(L)))
    checks = []
    for n in range(2 * k, n_max + 1):
        try:
            ok = feasible_solution(LSpec.of(n, k, values)).feasible
        except SingularMatrixError:
            ok = False
        checks.append((n, ok))
    return Threshold(
        k=k,
        L=values,
        n_max=n_max,
        n0=_suffix_threshold(checks),
        failures=[n for n, ok in checks if not ok],
    )
