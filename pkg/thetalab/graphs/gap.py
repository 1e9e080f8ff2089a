"""The mod-q gap family G_q(n, k): theta against the minrank bound C(n, q-1)."""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from thetalab.asympt.formulas import def_bound, leading_constant, rcw_bound
from thetalab.config import get_settings
from thetalab.core.combinat import LSpec, binom
from thetalab.exceptions import IdentityCheckError, InputError
from thetalab.graphs.alpha import alpha_bruteforce
from thetalab.graphs.johnson import build_graph
from thetalab.lp.theta_lp import sigma, theta

logger = logging.getLogger(__name__)


def prime_power(q: int) -> Tuple[int, int]:
    """Write q = p^m with p prime.

    Raises:
        InputError: q is not a prime power.
    """
    if q < 2:
        raise InputError(f"q={q} is not a prime power")
    p = next((d for d in range(2, math.isqrt(q) + 1) if q % d == 0), q)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise InputError(f"q={q} is not a prime power")
    return p, m


def gap_edge(q: int, intersection: int) -> bool:
    """A ~ B in G_q(n, k) iff |A & B| = -1 (mod q)."""
    return intersection % q == q - 1


def gap_L(q: int) -> Tuple[int, ...]:
    """Non-edge intersection sizes of G_q(n, q^2 - 1), derived from gap_edge."""
    k = q * q - 1
    L = tuple(l for l in range(k) if not gap_edge(q, l))
    if len(L) != q * q - q:
        raise IdentityCheckError(f"q={q}: derived |L|={len(L)}, expected {q * q - q}")
    return L


def gap_spec(q: int, n: int) -> LSpec:
    prime_power(q)
    k = q * q - 1
    if n < 2 * k:
        raise InputError(f"G_{q}(n, {k}) needs n >= {2 * k}, got n={n}")
    return LSpec.of(n, k, gap_L(q))


@dataclass(frozen=True)
class GapReport:
    """theta, sigma and the minrank bound for G_q(n, q^2 - 1)."""
    q: int
    p: int
    m: int
    k: int
    n: int
    L: Tuple[int, ...]
    N: int
    theta: Fraction
    sigma: Fraction
    minrank_bound: int
    def_bound: Fraction
    rcw_bound: int
    leading: Fraction
    alpha: Optional[int] = None
    alpha_exact: Optional[bool] = None

    @property
    def theta_complement(self) -> Fraction:
        """theta of the complement graph, N / theta."""
        return self.N / self.theta

    @property
    def target_exponent(self) -> Fraction:
        return 1 - Fraction(2, self.q + 1)

    @property
    def exponent_estimate(self) -> float:
        """log(theta / minrank_bound) / log N."""
        ratio = self.theta / self.minrank_bound
        log_ratio = math.log(ratio.numerator) - math.log(ratio.denominator)
        return log_ratio / math.log(self.N)

    @property
    def leading_ratio(self) -> Fraction:
        """theta / (leading * n^|L|); tends to 1."""
        return self.theta / (self.leading * Fraction(self.n) ** len(self.L))


def gap_report(
    q: int,
    n: int,
    include_alpha: bool = True,
    vertex_cap: Optional[int] = None,
    alpha_budget: Optional[int] = None,
) -> GapReport:
    """Evaluate the gap family at one n.

    Args:
        q: Prime power.
        n: Ground set size, n >= 2(q^2 - 1).
        include_alpha: Also compute alpha when C(n, k) is within the vertex cap.
        vertex_cap: Overrides settings.cap.
        alpha_budget: Node budget for the alpha search; when it runs out
            alpha is a lower bound and alpha_exact is False.

    Returns:
        GapReport.
    """
    p, m = prime_power(q)
    spec = gap_spec(q, n)
    N = binom(n, spec.k)

    cap = get_settings().cap if vertex_cap is None else vertex_cap
    alpha = alpha_exact = None
    if include_alpha and N <= cap:
        result = alpha_bruteforce(build_graph(spec, cap), alpha_budget)
        alpha, alpha_exact = result.value, result.exact

    report = GapReport(
        q=q,
        p=p,
        m=m,
        k=spec.k,
        n=n,
        L=spec.L,
        N=N,
        theta=theta(spec),
        sigma=sigma(spec),
        minrank_bound=binom(n, q - 1),
        def_bound=def_bound(spec).value,
        rcw_bound=rcw_bound(spec),
        leading=leading_constant(spec.k, spec.L).constant,
        alpha=alpha,
        alpha_exact=alpha_exact,
    )
    logger.info(
        f"gap q={q} n={n}: exponent {report.exponent_estimate:.4f} "
        f"(target {float(report.target_exponent):.4f})"
    )
    return report
