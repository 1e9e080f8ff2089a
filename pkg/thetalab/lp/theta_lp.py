"""The association-scheme LP for theta (free signs) and sigma (nonnegative)."""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import lcm
from threading import Lock
from typing import Dict, List, Mapping, Tuple

from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from thetalab.config import get_settings
from thetalab.core.combinat import LSpec
from thetalab.core.scheme import build_scheme
from thetalab.exceptions import SolverConsistencyError
from thetalab.lp.simplex import ExactSimplex, SimplexStatus
from thetalab.monitoring.metrics import LP_PIVOTS, LP_SOLVES, lp_timer

logger = logging.getLogger(__name__)

LpStatus = SimplexStatus


class SignMode(str, Enum):
    """Sign restriction on the decision variables a_i."""
    FREE = "FREE"  # Lovasz theta
    NONNEGATIVE = "NONNEGATIVE"  # Schrijver / Delsarte sigma


@dataclass(frozen=True)
class LpProblem:
    """max 1 + sum a_i  s.t.  constants[u] + sum_i coefficients[u][i] a_i >= 0.

    Row u is mu_u * (1 + sum_i a_i P_i^u / nu_i) >= 0 multiplied by
    ``scales[u]`` so that every stored entry is an integer. Variables are
    the classes i in M \\ {0}, in increasing order.
    """
    spec: LSpec
    sign_mode: SignMode
    indices: Tuple[int, ...]
    coefficients: Tuple[Tuple[int, ...], ...]
    constants: Tuple[int, ...]
    scales: Tuple[int, ...]

    @property
    def num_variables(self) -> int:
        return len(self.indices)

    @property
    def num_constraints(self) -> int:
        return len(self.constants)

    def row_value(self, u: int, assignment: Mapping[int, Fraction]) -> Fraction:
        """Left-hand side of row u (scaled) at the assignment."""
        return self.constants[u] + sum(
            (c * Fraction(assignment.get(i, 0)) for c, i in zip(self.coefficients[u], self.indices)),
            Fraction(0),
        )

    def violations(self, assignment: Mapping[int, Fraction]) -> List[int]:
        """Rows u whose constraint fails at the assignment."""
        return [u for u in range(self.num_constraints) if self.row_value(u, assignment) < 0]

    def is_feasible(self, assignment: Mapping[int, Fraction]) -> bool:
        if self.sign_mode is SignMode.NONNEGATIVE and any(
            Fraction(assignment.get(i, 0)) < 0 for i in self.indices
        ):
            return False
        return not self.violations(assignment)

    def objective(self, assignment: Mapping[int, Fraction]) -> Fraction:
        return 1 + sum((Fraction(assignment.get(i, 0)) for i in self.indices), Fraction(0))


@dataclass(frozen=True)
class LpSolution:
    """Certified exact solution.

    ``dual`` maps each row u to its multiplier y_u >= 0, proving
    optimum = 1 + sum_u y_u * constants[u].
    """
    status: LpStatus
    optimum: Fraction = Fraction(0)
    assignment: Dict[int, Fraction] = field(default_factory=dict)
    dual: Dict[int, Fraction] = field(default_factory=dict)
    pivots: int = 0


def build_lp(spec: LSpec, sign_mode: SignMode = SignMode.FREE) -> LpProblem:
    """Build the scheme LP for G(n, k, L).

    Args:
        spec: Instance with n >= 2k.
        sign_mode: FREE for theta, NONNEGATIVE for sigma.

    Returns:
        LpProblem with k + 1 integral rows and |L| variables.
    """
    spec.require_scheme()
    scheme = build_scheme(spec.n, spec.k)
    indices = spec.M[1:]

    coefficients = []
    constants = []
    scales = []
    for u in range(spec.k + 1):
        row = [scheme.Q(i, u) for i in indices]
        scale = lcm(1, *(q.denominator for q in row))
        coefficients.append(tuple(int(q * scale) for q in row))
        constants.append(scheme.mu[u] * scale)
        scales.append(scale)

    return LpProblem(
        spec=spec,
        sign_mode=SignMode(sign_mode),
        indices=indices,
        coefficients=tuple(coefficients),
        constants=tuple(constants),
        scales=tuple(scales),
    )


def certify(problem: LpProblem, solution: LpSolution) -> None:
    """Check primal feasibility and the dual certificate exactly.

    Raises:
        SolverConsistencyError: on any mismatch.
    """
    if not problem.is_feasible(solution.assignment):
        raise SolverConsistencyError(
            f"{problem.spec.label()}: primal assignment violates rows "
            f"{problem.violations(solution.assignment)}"
        )
    if problem.objective(solution.assignment) != solution.optimum:
        raise SolverConsistencyError(f"{problem.spec.label()}: objective does not match optimum")

    y = [solution.dual.get(u, Fraction(0)) for u in range(problem.num_constraints)]
    if any(v < 0 for v in y):
        raise SolverConsistencyError(f"{problem.spec.label()}: negative dual multiplier")

    for col, i in enumerate(problem.indices):
        reduced = sum(
            (-problem.coefficients[u][col] * y[u] for u in range(problem.num_constraints)),
            Fraction(0),
        )
        ok = reduced == 1 if problem.sign_mode is SignMode.FREE else reduced >= 1
        if not ok:
            raise SolverConsistencyError(
                f"{problem.spec.label()}: dual constraint for a_{i} fails ({reduced})"
            )

    bound = 1 + sum((y[u] * problem.constants[u] for u in range(problem.num_constraints)), Fraction(0))
    if bound != solution.optimum:
        raise SolverConsistencyError(
            f"{problem.spec.label()}: dual bound {bound} != optimum {solution.optimum}"
        )


def solve_exact(problem: LpProblem) -> LpSolution:
    """Solve the LP in exact rationals and certify the optimum.

    FREE variables are split as a = a+ - a-. A non-OPTIMAL status is
    returned as-is and logged as an error; callers treat it as a
    construction bug.
    """
    free = problem.sign_mode is SignMode.FREE
    s = problem.num_variables

    A = [
        [-c for c in row] + ([c for c in row] if free else [])
        for row in problem.coefficients
    ]
    c = [1] * s + ([-1] * s if free else [])

    with lp_timer(problem.sign_mode.value):
        result = ExactSimplex(A, problem.constants, c).solve()

    LP_SOLVES.labels(sign_mode=problem.sign_mode.value, status=result.status.value).inc()
    LP_PIVOTS.observe(result.pivots)

    if result.status is not SimplexStatus.OPTIMAL:
        logger.error(
            f"{problem.spec.label()} [{problem.sign_mode.value}]: LP {result.status.value} "
            f"after {result.pivots} pivots (column {result.unbounded_column})"
        )
        return LpSolution(status=result.status, pivots=result.pivots)

    assignment = {
        i: result.x[col] - (result.x[s + col] if free else 0)
        for col, i in enumerate(problem.indices)
    }
    solution = LpSolution(
        status=LpStatus.OPTIMAL,
        optimum=1 + result.objective,
        assignment=assignment,
        dual={u: y for u, y in enumerate(result.y)},
        pivots=result.pivots,
    )
    certify(problem, solution)
    return solution


def _solution_key(spec: LSpec, sign_mode: SignMode = SignMode.FREE):
    return hashkey(spec.n, spec.k, spec.L, SignMode(sign_mode))


@cached(
    cache=LRUCache(maxsize=get_settings().solution_cache_size),
    key=_solution_key,
    lock=Lock(),
)
def solve_spec(spec: LSpec, sign_mode: SignMode = SignMode.FREE) -> LpSolution:
    """Build and solve the LP for an instance (cached per instance and mode)."""
    solution = solve_exact(build_lp(spec, sign_mode))
    if solution.status is not LpStatus.OPTIMAL:
        raise SolverConsistencyError(
            f"{spec.label()} [{SignMode(sign_mode).value}]: LP status "
            f"{solution.status.value}; the theta LP of this instance must be bounded"
        )
    logger.debug(f"{spec.label()} [{SignMode(sign_mode).value}] optimum={solution.optimum}")
    return solution


def theta(spec: LSpec) -> Fraction:
    """Lovasz number of G(n, k, L)."""
    return solve_spec(spec, SignMode.FREE).optimum


def sigma(spec: LSpec) -> Fraction:
    """Schrijver/Delsarte bound of G(n, k, L)."""
    return solve_spec(spec, SignMode.NONNEGATIVE).optimum
