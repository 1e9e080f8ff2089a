"""Explicit graphs, brute-force alpha and the gap construction."""
from thetalab.graphs.alpha import AlphaResult, SandwichReport, alpha_bruteforce, sandwich_check
from thetalab.graphs.gap import GapReport, gap_edge, gap_L, gap_report, gap_spec, prime_power
from thetalab.graphs.johnson import (
    JohnsonGraph,
    build_graph,
    colex_subsets,
    complement_rows,
    expected_degree,
)

__all__ = [
    "AlphaResult",
    "SandwichReport",
    "alpha_bruteforce",
    "sandwich_check",
    "GapReport",
    "gap_edge",
    "gap_L",
    "gap_report",
    "gap_spec",
    "prime_power",
    "JohnsonGraph",
    "build_graph",
    "colex_subsets",
    "complement_rows",
    "expected_degree",
]
