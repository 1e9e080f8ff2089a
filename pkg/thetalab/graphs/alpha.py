"""Exact independence number by bitset branch and bound, and the alpha <= sigma <= theta check."""
import logging
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from thetalab.config import get_settings
from thetalab.core.combinat import LSpec
from thetalab.exceptions import IdentityCheckError
from thetalab.graphs.johnson import JohnsonGraph, build_graph, complement_rows
from thetalab.lp.theta_lp import sigma, theta
from thetalab.monitoring.metrics import ALPHA_NODES

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlphaResult:
    """Size of the best independent set found.

    When ``exact`` is False the node budget ran out and ``value`` is only a
    lower bound, certified by ``witness``. ``bound_reached`` means the search
    stopped at the caller's proven upper bound.
    """
    value: int
    exact: bool
    nodes: int
    witness: Tuple[int, ...] = ()
    bound_reached: bool = False


class _BudgetExhausted(Exception):
    pass


class _TargetReached(Exception):
    pass


class _CliqueSearch:
    """Maximum clique on the complement, with greedy colouring bounds.

    Candidates are taken in index order so traces are reproducible.
    """

    def __init__(self, adjacency: List[int], budget: int, initial: List[int], target: Optional[int]):
        self.adj = adjacency
        self.budget = budget
        self.target = target
        self.best: List[int] = list(initial)
        self.nodes = 0

    def _colour(self, candidates: int) -> Tuple[List[int], List[int]]:
        order: List[int] = []
        bounds: List[int] = []
        colour = 0
        uncoloured = candidates
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                low = available & -available
                v = low.bit_length() - 1
                available &= ~low & ~self.adj[v]
                uncoloured &= ~low
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def _record(self, current: List[int]) -> None:
        self.best = list(current)
        if self.target is not None and len(self.best) >= self.target:
            raise _TargetReached

    def expand(self, current: List[int], candidates: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        order, bounds = self._colour(candidates)
        for idx in range(len(order) - 1, -1, -1):
            if len(current) + bounds[idx] <= len(self.best):
                return
            v = order[idx]
            current.append(v)
            remaining = candidates & self.adj[v]
            if remaining:
                self.expand(current, remaining)
            elif len(current) > len(self.best):
                self._record(current)
            current.pop()
            candidates &= ~(1 << v)


def _greedy_independent(graph: JohnsonGraph, pool: int) -> List[int]:
    chosen: List[int] = []
    blocked = 0
    for v in range(graph.num_vertices):
        if pool >> v & 1 and not blocked >> v & 1:
            chosen.append(v)
            blocked |= graph.rows[v] | (1 << v)
    return chosen


def alpha_bruteforce(
    graph: JohnsonGraph,
    budget: Optional[int] = None,
    upper_bound: Optional[int] = None,
) -> AlphaResult:
    """Independence number of an explicit graph.

    Isolated vertices are taken outright; the rest is a maximum-clique
    search on the complement seeded with a greedy independent set.

    Args:
        graph: Explicit graph within the vertex cap.
        budget: Node limit (defaults to settings.alpha_node_budget).
        upper_bound: A proven bound on alpha, such as floor(sigma). The
            search stops as soon as a set of that size is found.

    Returns:
        AlphaResult; exact unless the budget was exhausted.
    """
    budget = get_settings().alpha_node_budget if budget is None else budget
    isolated = graph.isolated()
    taken = [v for v in range(graph.num_vertices) if isolated >> v & 1]
    pool = ((1 << graph.num_vertices) - 1) & ~isolated
    target = None if upper_bound is None else upper_bound - len(taken)

    search = _CliqueSearch(complement_rows(graph), budget, _greedy_independent(graph, pool), target)
    exact = True
    reached = target is not None and len(search.best) >= target
    if pool and not reached:
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, graph.num_vertices + 1000))
        try:
            search.expand([], pool)
        except _TargetReached:
            reached = True
        except _BudgetExhausted:
            exact = False
            logger.warning(
                f"{graph.spec.label()}: node budget {budget} exhausted; "
                f"alpha >= {len(taken) + len(search.best)}"
            )
        finally:
            sys.setrecursionlimit(limit)

    ALPHA_NODES.inc(search.nodes)
    witness = tuple(sorted(taken + search.best))
    return AlphaResult(
        value=len(witness),
        exact=exact,
        nodes=search.nodes,
        witness=witness,
        bound_reached=reached,
    )


@dataclass(frozen=True)
class SandwichReport:
    """alpha <= sigma <= theta at one instance."""
    spec: LSpec
    alpha: AlphaResult
    sigma: Fraction
    theta: Fraction

    @property
    def holds(self) -> bool:
        return self.alpha.value <= self.sigma <= self.theta

    @property
    def tight(self) -> bool:
        """alpha equals theta (as for Kneser graphs)."""
        return self.alpha.exact and self.alpha.value == self.theta


def sandwich_check(
    spec: LSpec,
    vertex_cap: Optional[int] = None,
    budget: Optional[int] = None,
) -> SandwichReport:
    """Compute alpha, sigma and theta and check their order exactly.

    sigma comes with an exact dual certificate, so floor(sigma) is used as a
    proven upper bound that ends the alpha search early. A greedy seed or a
    search leaf larger than that bound still fails the check.

    Raises:
        IdentityCheckError: the order is violated, which means a solver bug.
    """
    spec.require_scheme()
    graph = build_graph(spec, vertex_cap)
    sg, th = sigma(spec), theta(spec)
    report = SandwichReport(
        spec=spec,
        alpha=alpha_bruteforce(graph, budget, upper_bound=math.floor(sg)),
        sigma=sg,
        theta=th,
    )
    if not report.holds:
        raise IdentityCheckError(
            f"{spec.label()}: alpha={report.alpha.value}, sigma={report.sigma}, "
            f"theta={report.theta} violates alpha <= sigma <= theta"
        )
    return report
