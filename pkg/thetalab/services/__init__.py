"""Sweeps, empirical thresholds and identity verification."""
from thetalab.services.sweep import SweepRow, SweepTable, run_sweep, sweep_ns, sweep_row
from thetalab.services.thresholds import Threshold, feasibility_threshold, singleton_threshold
from thetalab.services.verification import (
    IdentityResult,
    VerificationReport,
    factorial_suite,
    ekr_suite,
    product_suite,
    run_verification,
    schrijver_suite,
    singleton_suite,
    feasible_suite,
)

__all__ = [
    "SweepRow",
    "SweepTable",
    "run_sweep",
    "sweep_ns",
    "sweep_row",
    "Threshold",
    "feasibility_threshold",
    "singleton_threshold",
    "IdentityResult",
    "VerificationReport",
    "factorial_suite",
    "ekr_suite",
    "product_suite",
    "run_verification",
    "schrijver_suite",
    "singleton_suite",
    "feasible_suite",
]
