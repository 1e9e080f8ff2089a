"""Exact integer/rational plumbing, problem instances and full-run decomposition."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from thetalab.exceptions import SchemeError

logger = logging.getLogger(__name__)

# All bound values are exact rationals; Fraction keeps lowest terms and a
# positive denominator.
Rational = Fraction


def binom(n: int, r: int) -> int:
    """Binomial coefficient C(n, r) over arbitrary-precision integers.

    Args:
        n: Upper index, must be nonnegative.
        r: Lower index; out-of-range values give 0.

    Returns:
        C(n, r), or 0 when r < 0 or r > n.
    """
    if n < 0:
        raise ValueError(f"binom: negative upper index n={n} is not supported")
    if r < 0 or r > n:
        return 0
    return comb(n, r)


class LSpec(BaseModel):
    """A problem instance G(n, k, L).

    L is canonicalized to a strictly increasing tuple. Empty L is allowed
    and describes the complete graph.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    L: Tuple[int, ...] = ()

    @field_validator("L", mode="before")
    @classmethod
    def _canonicalize(cls, value: Iterable[int]) -> Tuple[int, ...]:
        return tuple(sorted(set(int(v) for v in value)))

    @model_validator(mode="after")
    def _check_ranges(self) -> "LSpec":
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got k={self.k}")
        if self.n <= self.k:
            raise ValueError(f"need n > k, got n={self.n}, k={self.k}")
        bad = [l for l in self.L if l < 0 or l > self.k - 1]
        if bad:
            raise ValueError(f"L values {bad} outside [0, {self.k - 1}]")
        return self

    @classmethod
    def of(cls, n: int, k: int, L: Iterable[int] = ()) -> "LSpec":
        """Positional constructor."""
        return cls(n=n, k=k, L=tuple(L))

    @property
    def s(self) -> int:
        return len(self.L)

    @property
    def M(self) -> Tuple[int, ...]:
        """Scheme classes kept as non-edges: {0} plus k - l for each l in L."""
        return (0,) + tuple(sorted(self.k - l for l in self.L))

    def with_n(self, n: int) -> "LSpec":
        return LSpec(n=n, k=self.k, L=self.L)

    def with_L(self, L: Iterable[int]) -> "LSpec":
        return LSpec(n=self.n, k=self.k, L=tuple(L))

    def require_scheme(self) -> "LSpec":
        """Raise SchemeError unless n >= 2k."""
        if self.n < 2 * self.k:
            raise SchemeError(
                f"the Johnson scheme needs n >= 2k (got n={self.n}, k={self.k}); "
                "complement the ground set to handle k < n < 2k"
            )
        return self

    def label(self) -> str:
        return f"G({self.n},{self.k},{{{','.join(map(str, self.L))}}})"


@dataclass(frozen=True)
class Run:
    """A maximal block of consecutive integers."""
    start: int
    length: int

    @property
    def values(self) -> Tuple[int, ...]:
        return tuple(range(self.start, self.start + self.length))


@dataclass(frozen=True)
class RunDecomposition:
    """Full runs of a strictly increasing integer list, in order."""
    runs: Tuple[Run, ...]

    @property
    def b(self) -> int:
        return len(self.runs)

    @property
    def lengths(self) -> List[int]:
        return [run.length for run in self.runs]

    def flatten(self) -> Tuple[int, ...]:
        return tuple(v for run in self.runs for v in run.values)


def full_runs(L: Iterable[int]) -> RunDecomposition:
    """Split a strictly increasing list into its maximal runs.

    Args:
        L: Strictly increasing integers.

    Returns:
        RunDecomposition; empty input gives zero runs.
    """
    values = list(L)
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"full_runs expects a strictly increasing list, got {values}")

    runs: List[Run] = []
    for value in values:
        if runs and runs[-1].start + runs[-1].length == value:
            last = runs.pop()
            runs.append(Run(last.start, last.length + 1))
        else:
            runs.append(Run(value, 1))
    return RunDecomposition(tuple(runs))


def complement_values(k: int, L: Iterable[int]) -> Tuple[int, ...]:
    """[0, k-1] minus L, sorted."""
    present = set(L)
    return tuple(v for v in range(k) if v not in present)


def complement_L(spec: LSpec) -> LSpec:
    """Same n and k, with L replaced by [0, k-1] \\ L."""
    return spec.with_L(complement_values(spec.k, spec.L))


def complement_gap_lengths(k: int, L: Iterable[int]) -> List[int]:
    """Nonzero gap lengths between consecutive elements of L^C.

    L^C is padded with the sentinels -1 and k. Each gap of length > 0
    is exactly one full run of L, so the result equals the run lengths
    of L in order.
    """
    padded = [-1, *complement_values(k, L), k]
    gaps = [b - a - 1 for a, b in zip(padded, padded[1:])]
    return [g for g in gaps if g > 0]
