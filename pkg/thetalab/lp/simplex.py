"""Exact rational primal simplex with Bland's anti-cycling rule."""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)


class SimplexStatus(str, Enum):
    """Termination status of a solve."""
    OPTIMAL = "OPTIMAL"
    UNBOUNDED = "UNBOUNDED"
    INFEASIBLE = "INFEASIBLE"


@dataclass
class SimplexResult:
    """Outcome of a tableau solve.

    ``y`` holds one nonnegative multiplier per row; at optimality
    A^T y >= c and b^T y equals the objective.
    """
    status: SimplexStatus
    objective: Fraction = Fraction(0)
    x: List[Fraction] = field(default_factory=list)
    y: List[Fraction] = field(default_factory=list)
    pivots: int = 0
    unbounded_column: Optional[int] = None


class ExactSimplex:
    """Tableau for  max c^T x  s.t.  A x <= b,  x >= 0  with b >= 0.

    The slack basis is feasible at the start, so a single phase suffices.
    Entering column: lowest index with positive reduced cost. Leaving row:
    minimum ratio, ties broken by lowest basic variable index.
    """

    def __init__(
        self,
        A: Sequence[Sequence[Fraction]],
        b: Sequence[Fraction],
        c: Sequence[Fraction],
    ):
        """Initialize the tableau.

        Args:
            A: m x n constraint matrix.
            b: Nonnegative right-hand side of length m.
            c: Objective coefficients of length n.
        """
        self.m = len(A)
        self.n = len(c)
        if any(len(row) != self.n for row in A) or len(b) != self.m:
            raise ValueError("ExactSimplex: inconsistent dimensions")

        self.rhs = [Fraction(v) for v in b]
        self._feasible_start = all(v >= 0 for v in self.rhs)
        self.T = [
            [Fraction(v) for v in row] + [Fraction(int(r == i)) for r in range(self.m)]
            for i, row in enumerate(A)
        ]
        self.d = [Fraction(v) for v in c] + [Fraction(0)] * self.m
        self.value = Fraction(0)
        self.basis = [self.n + i for i in range(self.m)]
        self.pivots = 0

    def _entering(self) -> Optional[int]:
        for j, dj in enumerate(self.d):
            if dj > 0:
                return j
        return None

    def _leaving(self, j: int) -> Optional[int]:
        best = None
        for i in range(self.m):
            a = self.T[i][j]
            if a > 0:
                key = (self.rhs[i] / a, self.basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        return None if best is None else best[1]

    def _pivot(self, r: int, j: int) -> None:
        piv = self.T[r][j]
        row = [v / piv for v in self.T[r]]
        self.T[r] = row
        self.rhs[r] /= piv

        for i in range(self.m):
            f = self.T[i][j]
            if i != r and f != 0:
                self.T[i] = [a - f * p for a, p in zip(self.T[i], row)]
                self.rhs[i] -= f * self.rhs[r]

        f = self.d[j]
        self.d = [a - f * p for a, p in zip(self.d, row)]
        self.value += f * self.rhs[r]

        logger.debug(f"Pivot: x{self.basis[r]} leaves, x{j} enters (row {r})")
        self.basis[r] = j
        self.pivots += 1

    def solve(self) -> SimplexResult:
        """Run Bland's primal simplex to termination."""
        if not self._feasible_start:
            return SimplexResult(status=SimplexStatus.INFEASIBLE)

        while True:
            j = self._entering()
            if j is None:
                break
            r = self._leaving(j)
            if r is None:
                logger.error(f"Simplex unbounded along column {j} after {self.pivots} pivots")
                return SimplexResult(
                    status=SimplexStatus.UNBOUNDED,
                    pivots=self.pivots,
                    unbounded_column=j,
                )
            self._pivot(r, j)

        x = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                x[var] = self.rhs[i]
        y = [-self.d[self.n + i] for i in range(self.m)]

        return SimplexResult(
            status=SimplexStatus.OPTIMAL,
            objective=self.value,
            x=x,
            y=y,
            pivots=self.pivots,
        )
