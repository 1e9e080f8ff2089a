"""Acceptance run: exact identities, asymptotic fixtures and ground-truth sandwiches."""
import argparse
import json
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple

from thetalab.asympt.feasible import detP_check, feasible_solution
from thetalab.asympt.formulas import leading_constant
from thetalab.config import get_settings
from thetalab.core.combinat import LSpec, binom
from thetalab.exceptions import IdentityCheckError, SingularMatrixError
from thetalab.graphs.alpha import sandwich_check
from thetalab.graphs.gap import gap_report
from thetalab.lp.theta_lp import theta
from thetalab.services.sweep import run_sweep, sweep_ns
from thetalab.services.verification import factorial_suite, ekr_suite, product_suite, singleton_suite

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

settings = get_settings()

FIXTURES: List[Tuple[int, Tuple[int, ...]]] = [
    (3, (1,)),
    (4, (1, 2)),
    (4, (0, 2)),
    (5, (0, 1, 3)),
    (5, (1, 2, 3)),
]

# Residuals (value - leading) / n^(s-1) are only ever reported; the bound
# below just flags runaway growth over n <= 200.
RESIDUAL_LIMIT = 200

# Per-instance alpha node budget; instances that run out are listed as lower
# bounds instead of being reported as exact.
GROUND_TRUTH_BUDGET = 200_000


@dataclass
class Criterion:
    """One acceptance criterion and its outcome."""
    number: int
    name: str
    check: Callable[[], Tuple[bool, Dict[str, Any]]]
    time_limit: float
    passed: bool = False
    details: Dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0


def _suite(result) -> Tuple[bool, Dict[str, Any]]:
    return result.passed, {
        "checked": result.checked,
        "failures": result.failures[:20],
        **result.details,
    }


def check_ekr():
    return _suite(ekr_suite(6, n_max=30))


def check_product():
    return _suite(product_suite(5))


def check_factorial_identity():
    return _suite(factorial_suite(10))


def check_singleton():
    return _suite(singleton_suite(6, n_max=60))


_sweeps: Dict[Tuple[int, Tuple[int, ...]], Any] = {}


def _fixture_sweep(k: int, L: Tuple[int, ...]):
    if (k, L) not in _sweeps:
        _sweeps[(k, L)] = run_sweep(k, L, sweep_ns(2 * k, 200, samples=10))
    return _sweeps[(k, L)]


def check_leading_term():
    ok = True
    details = {}
    for k, L in FIXTURES:
        table = _fixture_sweep(k, L)
        low, high = table.residual_range
        entry = {"residual_min": float(low), "residual_max": float(high), "spread": float(table.spread)}
        ok &= max(abs(low), abs(high)) < RESIDUAL_LIMIT
        if len(L) <= 2:
            n = 1000
            ratio = theta(LSpec.of(n, k, L)) / (table.constant * Fraction(n) ** len(L))
            entry["ratio_at_1000"] = float(ratio)
            ok &= abs(ratio - 1) < Fraction(2, 100)
        details[f"k={k},L={list(L)}"] = entry
    return ok, details


def check_detP():
    ok = True
    details = {}
    for k, L in FIXTURES:
        r3 = detP_check(LSpec.of(10**3, k, L)).ratio
        r5 = detP_check(LSpec.of(10**5, k, L)).ratio
        ok &= Fraction(9, 10) <= r3 <= Fraction(11, 10)
        ok &= Fraction(99, 100) <= r5 <= Fraction(101, 100)
        details[f"k={k},L={list(L)}"] = {"ratio_1e3": float(r3), "ratio_1e5": float(r5)}
    return ok, details


def check_feasible_sandwich():
    ok = True
    details = {}
    for k, L in FIXTURES:
        s = len(L)
        worst = Fraction(0)
        feasible_ns = []
        for n in sweep_ns(2 * k, 200, samples=10):
            spec = LSpec.of(n, k, L)
            try:
                point = feasible_solution(spec)
            except SingularMatrixError:
                continue
            if not point.feasible:
                continue
            gap = theta(spec) - point.objective
            ok &= gap >= 0
            worst = max(worst, gap / Fraction(n) ** (s - 1))
            feasible_ns.append(n)
        details[f"k={k},L={list(L)}"] = {"feasible_n": feasible_ns, "max_scaled_gap": float(worst)}
        ok &= worst < RESIDUAL_LIMIT
    return ok, details


def check_ground_truth():
    ok = True
    checked = 0
    kneser_tight = 0
    inexact: List[str] = []
    at_bound = 0
    for k in range(1, 5):
        for n in range(2 * k, 13):
            if binom(n, k) > 2000:
                continue
            for size in range(k + 1):
                for L in combinations(range(k), size):
                    spec = LSpec.of(n, k, L)
                    try:
                        report = sandwich_check(spec, budget=GROUND_TRUTH_BUDGET)
                    except IdentityCheckError as e:
                        logger.error(str(e))
                        ok = False
                        continue
                    checked += 1
                    at_bound += int(report.alpha.bound_reached)
                    if not report.alpha.exact:
                        inexact.append(spec.label())
                    if L == tuple(range(1, k)) and k >= 2:
                        ok &= report.tight
                        kneser_tight += int(report.tight)
    return ok, {
        "instances": checked,
        "alpha_exact": checked - len(inexact),
        "alpha_lower_bound_only": inexact,
        "stopped_at_sigma_bound": at_bound,
        "node_budget": GROUND_TRUTH_BUDGET,
        "kneser_tight": kneser_tight,
    }


def _increasing(values: List[float]) -> bool:
    return all(b > a for a, b in zip(values, values[1:]))


def check_gap():
    ok = True
    details = {}
    for q in (2, 3):
        estimates = [
            gap_report(q, n, include_alpha=False).exponent_estimate for n in (50, 100, 200, 400)
        ]
        ok &= _increasing(estimates)
        details[f"q={q}"] = estimates
    ok &= abs(details["q=2"][-1] - 1 / 3) < 0.1
    return ok, details


def check_sigma_order():
    ok = True
    details = {}
    for k, L in FIXTURES:
        low, high = _fixture_sweep(k, L).sigma_residual_range
        ok &= max(abs(low), abs(high)) < RESIDUAL_LIMIT
        details[f"k={k},L={list(L)}"] = {"sigma_residual_min": float(low), "sigma_residual_max": float(high)}
    return ok, details


CRITERIA: List[Criterion] = [
    Criterion(1, "EKR/Wilson exactness", check_ekr, 60),
    Criterion(2, "Product identity", check_product, 120),
    Criterion(3, "Leading constants of L and L^C multiply to 1/k!", check_factorial_identity, 60),
    Criterion(4, "|L| = 1 closed form and slope", check_singleton, 300),
    Criterion(5, "Leading term of theta", check_leading_term, 600),
    Criterion(6, "det(P) leading term", check_detP, 60),
    Criterion(7, "Explicit feasible point below theta", check_feasible_sandwich, 300),
    Criterion(8, "alpha <= sigma <= theta on small instances", check_ground_truth, 600),
    Criterion(9, "Gap construction trend", check_gap, 300),
    Criterion(10, "Leading term of sigma", check_sigma_order, 600),
]


def main():
    """Run the acceptance criteria."""
    parser = argparse.ArgumentParser(description="Run the thetalab acceptance criteria")
    parser.add_argument("--only", type=str, default="", help="comma-separated criterion numbers")
    parser.add_argument("--output", type=str, default="acceptance_results.json", help="Output file")
    args = parser.parse_args()

    selected = {int(x) for x in args.only.split(",") if x.strip()}
    criteria = [c for c in CRITERIA if not selected or c.number in selected]

    for criterion in criteria:
        logger.info(f"Criterion {criterion.number}: {criterion.name}...")
        start = time.perf_counter()
        criterion.passed, criterion.details = criterion.check()
        criterion.seconds = time.perf_counter() - start
        if criterion.seconds > criterion.time_limit:
            logger.warning(f"Criterion {criterion.number} took {criterion.seconds:.0f}s (limit {criterion.time_limit:.0f}s)")
            criterion.details["over_time_limit"] = True
            criterion.passed = False

    # Print summary
    print("\n" + "=" * 60)
    print("thetalab Acceptance Results")
    print("=" * 60)
    for c in criteria:
        status = "PASS" if c.passed else "FAIL"
        print(f"  [{status}] {c.number:2d}. {c.name} ({c.seconds:.1f}s)")
    print("=" * 60)

    output_path = Path(args.output)
    with open(output_path, "w") as f:
        json.dump(
            [
                {"number": c.number, "name": c.name, "passed": c.passed, "seconds": c.seconds, "details": c.details}
                for c in criteria
            ],
            f,
            indent=2,
            default=str,
        )
    logger.info(f"Results saved to {output_path}")

    if not all(c.passed for c in criteria):
        logger.warning("Some acceptance criteria failed!")
        return 3
    return 0


if __name__ == "__main__":
    exit(main())
