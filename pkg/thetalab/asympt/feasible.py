"""The explicit feasible LP point built from P^{-1}, and the det(P) leading term."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Dict, Iterable, List, Tuple

from thetalab.asympt.formulas import run_factorial_product
from thetalab.core.combinat import LSpec, binom
from thetalab.core.linalg import bareiss_determinant, solve_integer_system
from thetalab.core.scheme import build_P_matrix
from thetalab.exceptions import InputError, SingularMatrixError
from thetalab.lp.theta_lp import SignMode, build_lp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FeasibleVector:
    """a_{k-l_i} = C(k,k-l_i) C(n-k,k-l_i) v_i with v = P^{-1}(0,...,0,-1).

    ``values`` is ordered like L. Feasibility is only guaranteed for n
    large; ``violated_rows`` lists the LP rows u that fail at this n.
    """
    spec: LSpec
    values: Tuple[Fraction, ...]
    objective: Fraction
    feasible: bool
    violated_rows: Tuple[int, ...] = ()
    tight_rows: Tuple[int, ...] = ()

    @property
    def assignment(self) -> Dict[int, Fraction]:
        """Map from scheme class k - l_i to its value."""
        return {self.spec.k - l: a for l, a in zip(self.spec.L, self.values)}


@dataclass(frozen=True)
class DetPCheck:
    """Exact det(P) at n next to its predicted leading term."""
    n: int
    det: int
    predicted_leading: Fraction
    exponent: int

    @property
    def predicted(self) -> Fraction:
        return self.predicted_leading * Fraction(self.n) ** self.exponent

    @property
    def ratio(self) -> Fraction:
        """det(P) / (predicted_leading * n^exponent); tends to 1."""
        return self.det / self.predicted


def _values(spec: LSpec) -> Tuple[int, ...]:
    if spec.s == 0:
        raise InputError(f"{spec.label()}: the feasible point needs |L| >= 1")
    return spec.L


def det_constant(k: int, L: Iterable[int]) -> Fraction:
    """Positive C with det(P) = (-1)^s C n^e + O(n^(e-1))."""
    values = tuple(sorted(set(L)))
    return Fraction(
        prod(l + 1 for l in values),
        run_factorial_product(values) * prod(factorial(k - l - 1) for l in values),
    )


def detP_check(spec: LSpec) -> DetPCheck:
    """Exact det(P) plus (-1)^s C and the exponent sk - sum(L) - s."""
    values = _values(spec)
    s, k = spec.s, spec.k
    matrix = build_P_matrix(spec)
    det = bareiss_determinant(matrix.rows())
    return DetPCheck(
        n=spec.n,
        det=det,
        predicted_leading=(-1) ** s * det_constant(k, values),
        exponent=s * k - sum(values) - s,
    )


def feasible_solution(spec: LSpec) -> FeasibleVector:
    """Build the explicit point and test it against every LP row.

    Raises:
        SingularMatrixError: det(P) = 0 at this n; retry at a larger n.
    """
    values = _values(spec)
    matrix = build_P_matrix(spec)
    if bareiss_determinant(matrix.rows()) == 0:
        raise SingularMatrixError(f"{spec.label()}: P is singular at n={spec.n}")

    rhs = [0] * (spec.s - 1) + [-1]
    v = solve_integer_system(matrix.rows(), rhs)

    n, k = spec.n, spec.k
    a = tuple(binom(k, k - l) * binom(n - k, k - l) * v_i for l, v_i in zip(values, v))
    assignment = {k - l: a_i for l, a_i in zip(values, a)}

    problem = build_lp(spec, SignMode.FREE)
    violated = tuple(problem.violations(assignment))
    tight = tuple(
        u for u in range(problem.num_constraints) if problem.row_value(u, assignment) == 0
    )
    if violated:
        logger.debug(f"{spec.label()}: explicit point violates rows {list(violated)}")

    return FeasibleVector(
        spec=spec,
        values=a,
        objective=1 + sum(a, Fraction(0)),
        feasible=not violated,
        violated_rows=violated,
        tight_rows=tight,
    )


def feasible_leading_coefficients(k: int, L: Iterable[int]) -> List[Tuple[Fraction, int]]:
    """Leading terms of each a_{k-l_i}: (C_i, s - i + 1).

    C_1 coincides with the leading constant of theta.

    Args:
        k: Subset size.
        L: Nonempty subset of [0, k-1].

    Returns:
        One (coefficient, exponent) pair per element of L, in order.
    """
    values = tuple(sorted(set(L)))
    if not values:
        raise InputError("feasible_leading_coefficients needs |L| >= 1")
    s = len(values)
    C = det_constant(k, values)

    terms: List[Tuple[Fraction, int]] = []
    for i in range(s):
        head = values[:i]
        D = det_constant(k, head) if head else Fraction(1)
        E = Fraction(
            prod(binom(k - values[j] - 1, k - values[j + 1]) for j in range(i, s - 1)),
            prod(factorial(k - values[j]) for j in range(i + 1, s)),
        )
        C_i = binom(k, k - values[i]) * D * E / (factorial(k - values[i]) * C)
        terms.append((C_i, s - i))
    return terms
