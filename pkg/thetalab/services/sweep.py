"""n-sweeps of theta and sigma against the leading term and the DEF/RCW bounds."""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

import numpy as np

from thetalab.asympt.formulas import def_bound, leading_constant, rcw_bound
from thetalab.config import get_settings
from thetalab.core.combinat import LSpec
from thetalab.exceptions import InputError
from thetalab.lp.theta_lp import sigma, theta

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    """One n of a sweep; residuals are (value - leading) / n^(s-1)."""
    n: int
    theta: Fraction
    sigma: Fraction
    leading: Fraction
    residual: Fraction
    sigma_residual: Fraction
    def_bound: Fraction
    def_valid: bool
    rcw_bound: int


@dataclass(frozen=True)
class SweepTable:
    k: int
    L: tuple
    constant: Fraction
    rows: List[SweepRow]

    @property
    def residual_range(self) -> tuple:
        """(min, max) of the theta residual column."""
        values = [row.residual for row in self.rows]
        return min(values), max(values)

    @property
    def sigma_residual_range(self) -> tuple:
        values = [row.sigma_residual for row in self.rows]
        return min(values), max(values)

    @property
    def spread(self) -> Fraction:
        low, high = self.residual_range
        return high - low


def sweep_ns(
    n_from: int,
    n_to: int,
    step: Optional[int] = None,
    samples: Optional[int] = None,
) -> List[int]:
    """Sample points: an arithmetic range with ``step``, else a geometric one.

    Args:
        n_from: First n.
        n_to: Last n (inclusive).
        step: Arithmetic step.
        samples: Number of geometric points (default 12).

    Returns:
        Sorted distinct integers in [n_from, n_to].
    """
    if n_to < n_from:
        raise InputError(f"empty sweep range [{n_from}, {n_to}]")
    if step is not None:
        if step < 1:
            raise InputError(f"sweep step must be positive, got {step}")
        return list(range(n_from, n_to + 1, step))
    if samples is not None and samples < 1:
        raise InputError(f"sweep samples must be positive, got {samples}")
    points = np.geomspace(n_from, n_to, num=samples or 12)
    return sorted({int(round(p)) for p in points} | {n_from, n_to})


def sweep_row(spec: LSpec, constant: Fraction) -> SweepRow:
    n, s = spec.n, spec.s
    lead = constant * Fraction(n) ** s
    scale = Fraction(n) ** (s - 1)
    th = theta(spec)
    sg = sigma(spec)
    bound = def_bound(spec)
    return SweepRow(
        n=n,
        theta=th,
        sigma=sg,
        leading=lead,
        residual=(th - lead) / scale,
        sigma_residual=(sg - lead) / scale,
        def_bound=bound.value,
        def_valid=bound.valid,
        rcw_bound=rcw_bound(spec),
    )


def run_sweep(
    k: int,
    L: Iterable[int],
    ns: Sequence[int],
    workers: Optional[int] = None,
) -> SweepTable:
    """Evaluate every n concurrently; rows come back in input order.

    Raises:
        InputError: empty L, or some n < 2k.
    """
    values = tuple(sorted(set(L)))
    if not values:
        raise InputError("a sweep needs |L| >= 1")
    specs = [LSpec.of(n, k, values).require_scheme() for n in ns]
    constant = leading_constant(k, values).constant

    workers = workers or get_settings().sweep_workers
    logger.info(f"Sweeping k={k}, L={list(values)} over {len(specs)} values of n")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(lambda spec: sweep_row(spec, constant), specs))
    return SweepTable(k=k, L=values, constant=constant, rows=rows)
