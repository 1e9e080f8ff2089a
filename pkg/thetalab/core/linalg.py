"""Fraction-free (Bareiss) elimination on integer matrices."""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from thetalab.exceptions import SingularMatrixError

logger = logging.getLogger(__name__)


def _bareiss_forward(
    rows: List[List[int]], size: int
) -> Tuple[List[List[int]], int, Optional[int]]:
    """Two-step Bareiss elimination over the first ``size`` columns.

    Every division is exact: after step k the trailing entries are
    (k+1)x(k+1) minors of the (row-permuted) input.

    Returns:
        (rows, sign, failed_column) where failed_column is the column with
        no nonzero pivot, or None.
    """
    sign = 1
    prev = 1
    width = len(rows[0]) if rows else 0
    for k in range(size):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if rows[i][k] != 0), None)
            if swap is None:
                return rows, sign, k
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, size):
            factor = rows[i][k]
            for j in range(k + 1, width):
                rows[i][j] = (pivot * rows[i][j] - factor * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return rows, sign, None


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix."""
    size = len(matrix)
    if size == 0:
        return 1
    if any(len(row) != size for row in matrix):
        raise ValueError("bareiss_determinant expects a square matrix")
    rows = [[int(v) for v in row] for row in matrix]
    rows, sign, failed = _bareiss_forward(rows, size)
    if failed is not None:
        return 0
    return sign * rows[size - 1][size - 1]


def solve_integer_system(
    matrix: Sequence[Sequence[int]], rhs: Sequence[int]
) -> List[Fraction]:
    """Solve A x = b exactly for square integer A and integer b.

    Raises:
        SingularMatrixError: if A is singular.
    """
    size = len(matrix)
    rows = [[int(v) for v in row] + [int(b)] for row, b in zip(matrix, rhs)]
    rows, _, failed = _bareiss_forward(rows, size)
    if failed is not None:
        raise SingularMatrixError(f"matrix is singular (no pivot in column {failed})")

    x: List[Fraction] = [Fraction(0)] * size
    for i in reversed(range(size)):
        acc = Fraction(rows[i][size]) - sum(
            (rows[i][j] * x[j] for j in range(i + 1, size)), Fraction(0)
        )
        x[i] = acc / rows[i][i]
    return x
