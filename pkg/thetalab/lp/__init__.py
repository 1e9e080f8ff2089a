"""Exact linear programming for theta and sigma."""
from thetalab.lp.simplex import ExactSimplex, SimplexResult, SimplexStatus
from thetalab.lp.theta_lp import (
    LpProblem,
    LpSolution,
    LpStatus,
    SignMode,
    build_lp,
    certify,
    sigma,
    solve_exact,
    solve_spec,
    theta,
)

__all__ = [
    "ExactSimplex",
    "SimplexResult",
    "SimplexStatus",
    "LpProblem",
    "LpSolution",
    "LpStatus",
    "SignMode",
    "build_lp",
    "certify",
    "sigma",
    "solve_exact",
    "solve_spec",
    "theta",
]
