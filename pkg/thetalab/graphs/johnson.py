"""Explicit generalized Johnson graphs G(n, k, L) at desk scale."""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np

from thetalab.config import get_settings
from thetalab.core.combinat import LSpec, binom
from thetalab.exceptions import ResourceCapError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JohnsonGraph:
    """Vertices are the k-subsets of [n] (1-based) in colex order.

    ``rows[v]`` is the neighbourhood of v as a bitmask over vertex indices;
    A ~ B iff |A & B| is not in L.
    """
    spec: LSpec
    vertices: Tuple[Tuple[int, ...], ...]
    rows: Tuple[int, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def neighbors(self, v: int) -> List[int]:
        mask = self.rows[v]
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    def isolated(self) -> int:
        """Bitmask of vertices with no neighbours."""
        return sum(1 << v for v, row in enumerate(self.rows) if row == 0)

    def dump_lines(self) -> List[str]:
        """One line per vertex: the sorted subset, a colon, then neighbour indices."""
        return [
            f"{','.join(map(str, vertex))}: {' '.join(map(str, self.neighbors(v)))}".rstrip()
            for v, vertex in enumerate(self.vertices)
        ]


def colex_subsets(n: int, k: int) -> List[Tuple[int, ...]]:
    """All k-subsets of {1..n} in colexicographic order."""
    return sorted(combinations(range(1, n + 1), k), key=lambda c: c[::-1])


def expected_degree(spec: LSpec) -> int:
    """sum over j in [0, k-1] \\ L of C(k, j) C(n-k, k-j)."""
    excluded = set(spec.L)
    return sum(
        binom(spec.k, j) * binom(spec.n - spec.k, spec.k - j)
        for j in range(spec.k)
        if j not in excluded
    )


def build_graph(spec: LSpec, vertex_cap: Optional[int] = None) -> JohnsonGraph:
    """Build G(n, k, L) with bitmask adjacency rows.

    Args:
        spec: Instance; n > k suffices here.
        vertex_cap: Maximum number of vertices (defaults to settings.cap).

    Returns:
        JohnsonGraph.

    Raises:
        ResourceCapError: C(n, k) exceeds the cap.
    """
    cap = get_settings().cap if vertex_cap is None else vertex_cap
    size = binom(spec.n, spec.k)
    if size > cap:
        raise ResourceCapError(
            f"{spec.label()} has {size} vertices, above the cap of {cap}; "
            "use the bounds-only commands (theta, sweep) or raise THETALAB_CAP"
        )

    vertices = colex_subsets(spec.n, spec.k)
    incidence = np.zeros((size, spec.n), dtype=np.int16)
    for v, subset in enumerate(vertices):
        incidence[v, [e - 1 for e in subset]] = 1

    intersections = incidence @ incidence.T
    adjacency = ~np.isin(intersections, np.asarray(spec.L, dtype=np.int16))
    np.fill_diagonal(adjacency, False)

    packed = np.packbits(adjacency, axis=1, bitorder="little")
    rows = tuple(int.from_bytes(row.tobytes(), "little") for row in packed)

    logger.debug(f"Built {spec.label()}: {size} vertices")
    return JohnsonGraph(spec=spec, vertices=tuple(vertices), rows=rows)


def complement_rows(graph: JohnsonGraph) -> List[int]:
    """Adjacency rows of the complement graph (no loops)."""
    full = (1 << graph.num_vertices) - 1
    return [full & ~row & ~(1 << v) for v, row in enumerate(graph.rows)]
