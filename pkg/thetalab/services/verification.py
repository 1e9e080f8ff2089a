"""Exhaustive identity suites behind the verify command."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from thetalab.asympt.feasible import feasible_solution
from thetalab.asympt.formulas import factorial_identity, schrijver_alternative, singleton_slope
from thetalab.config import get_settings
from thetalab.core.combinat import LSpec, binom, complement_L
from thetalab.lp.theta_lp import theta
from thetalab.services.thresholds import feasibility_threshold, singleton_threshold

logger = logging.getLogger(__name__)

ThetaFn = Callable[[LSpec], Fraction]

# Relative error allowed between theta/n and the singleton slope at n = 500.
SLOPE_TOLERANCE = Fraction(5, 100)
SLOPE_N = 500

# Candidate labels kept in a suite report.
MAX_LISTED = 20


@dataclass
class IdentityResult:
    """Outcome of one suite; ``failures`` holds a readable dump per counterexample."""
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    details: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(message)


@dataclass
class VerificationReport:
    k_max: int
    lp_k_max: int
    results: List[IdentityResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def all_subsets(k: int) -> Iterator[Tuple[int, ...]]:
    for size in range(k + 1):
        yield from combinations(range(k), size)


def factorial_suite(k_max: int) -> IdentityResult:
    """Leading constants of L and L^C multiply to 1/k! for every L."""
    result = IdentityResult(name="factorial")
    for k in range(1, k_max + 1):
        target = Fraction(1, factorial(k))
        for L in all_subsets(k):
            value = factorial_identity(k, L)
            result.check(value == target, f"k={k} L={list(L)}: {value} != {target}")
    return result


def ekr_suite(k_max: int, n_max: int = 30, theta_fn: ThetaFn = theta) -> IdentityResult:
    """theta(n, k, [t, k-1]) = C(n-t, k-t) in the Wilson range."""
    result = IdentityResult(name="ekr")
    for k in range(2, k_max + 1):
        for t in range(1, k):
            for n in range(max(2 * k, (t + 1) * (k - t + 1)), n_max + 1):
                spec = LSpec.of(n, k, range(t, k))
                value = theta_fn(spec)
                expected = binom(n - t, k - t)
                result.check(value == expected, f"{spec.label()}: theta={value} != {expected}")
    return result


def product_suite(k_max: int, theta_fn: ThetaFn = theta) -> IdentityResult:
    """theta(L) * theta(L^C) = C(n, k)."""
    result = IdentityResult(name="product")
    for k in range(1, k_max + 1):
        ns = sorted({n for n in (2 * k, 2 * k + 3, 2 * k + 7, 25) if n >= 2 * k})
        for n in ns:
            for L in all_subsets(k):
                spec = LSpec.of(n, k, L)
                value = theta_fn(spec) * theta_fn(complement_L(spec))
                result.check(
                    value == binom(n, k),
                    f"{spec.label()}: theta*theta(complement)={value} != {binom(n, k)}",
                )
    return result


def singleton_suite(
    k_max: int,
    n_max: Optional[int] = None,
    theta_fn: ThetaFn = theta,
) -> IdentityResult:
    """LP theta of G(n,k,{l}) against the closed form and its slope.

    Agreement must hold on [n0, n_max] for some recorded n0, and theta/n must
    be within 5% of the slope at n = 500.
    """
    n_max = n_max or get_settings().singleton_n_max
    result = IdentityResult(name="singleton")
    for k in range(1, k_max + 1):
        for l in range(k):
            n0 = singleton_threshold(k, l, n_max, theta_fn).n0
            result.details[f"k={k},l={l}"] = "none" if n0 is None else str(n0)
            result.check(n0 is not None, f"k={k} l={l}: no agreement up to n={n_max}")

            slope = singleton_slope(k, l)
            observed = theta_fn(LSpec.of(SLOPE_N, k, [l])) / SLOPE_N
            error = abs(observed - slope) / slope
            result.check(
                error < SLOPE_TOLERANCE,
                f"k={k} l={l}: theta/n={float(observed):.6f} vs slope {float(slope):.6f}",
            )
    return result


def schrijver_suite(k_max: int, theta_fn: ThetaFn = theta) -> IdentityResult:
    """theta <= DEF for L or for L^C; instances with theta > DEF are listed as candidates."""
    result = IdentityResult(name="schrijver")
    candidates: List[str] = []
    for k in range(1, k_max + 1):
        for n in sorted({2 * k, 2 * k + 3, max(25, 2 * k)}):
            for L in all_subsets(k):
                spec = LSpec.of(n, k, L)
                alternative = schrijver_alternative(spec, theta_fn)
                result.check(
                    alternative.holds,
                    f"{spec.label()}: theta exceeds DEF for both L and its complement",
                )
                if alternative.counterexample_candidate:
                    candidates.append(spec.label())
    result.details["counterexample_candidates"] = str(len(candidates))
    if candidates:
        result.details["candidates"] = ", ".join(candidates[:MAX_LISTED])
    return result


def feasible_suite(
    k_max: int,
    n_max: Optional[int] = None,
    theta_fn: ThetaFn = theta,
) -> IdentityResult:
    """The explicit P^{-1} point stays below theta wherever it is feasible.

    Records the empirical n0 after which the point is feasible up to n_max.
    """
    n_max = n_max or get_settings().feasible_n_max
    result = IdentityResult(name="feasible")
    for k in range(1, k_max + 1):
        for L in all_subsets(k):
            if not L:
                continue
            threshold = feasibility_threshold(k, L, n_max)
            result.details[f"k={k},L={list(L)}"] = "none" if threshold.n0 is None else str(threshold.n0)
            if threshold.n0 is None:
                continue
            for n in sorted({threshold.n0, n_max}):
                spec = LSpec.of(n, k, L)
                objective = feasible_solution(spec).objective
                value = theta_fn(spec)
                result.check(objective <= value, f"{spec.label()}: point {objective} above theta {value}")
    return result


def run_verification(k_max: int, theta_fn: ThetaFn = theta) -> VerificationReport:
    """The 1/k! identity up to k_max; LP-backed suites up to min(k_max, verify_lp_k_max).

    ``theta_fn`` is injectable so that a deliberately corrupted solver can be
    shown to fail the suites.
    """
    settings = get_settings()
    lp_k_max = min(k_max, settings.verify_lp_k_max)
    report = VerificationReport(k_max=k_max, lp_k_max=lp_k_max)
    report.results.append(factorial_suite(k_max))
    report.results.append(ekr_suite(lp_k_max, theta_fn=theta_fn))
    report.results.append(product_suite(lp_k_max, theta_fn=theta_fn))
    report.results.append(
        singleton_suite(min(lp_k_max, settings.singleton_k_max), theta_fn=theta_fn)
    )
    report.results.append(schrijver_suite(lp_k_max, theta_fn=theta_fn))
    report.results.append(
        feasible_suite(min(lp_k_max, settings.feasible_k_max), theta_fn=theta_fn)
    )
    for r in report.results:
        level = logging.INFO if r.passed else logging.ERROR
        logger.log(level, f"verify {r.name}: {r.checked} checks, {len(r.failures)} failures")
    return report
