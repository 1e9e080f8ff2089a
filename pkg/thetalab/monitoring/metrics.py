"""Prometheus metrics for solver and search workloads."""
import logging
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator

from prometheus_client import (
    CollectorRegistry, Counter, Histogram, generate_latest
)

logger = logging.getLogger(__name__)


# Custom registry so nothing leaks into the process-wide default one
REGISTRY = CollectorRegistry()

# ============================================================================
# LP Metrics
# ============================================================================

LP_SOLVES = Counter(
    'thetalab_lp_solves_total',
    'Exact LP solves',
    ['sign_mode', 'status'],
    registry=REGISTRY
)

LP_PIVOTS = Histogram(
    'thetalab_lp_pivots',
    'Simplex pivots per solve',
    buckets=[0, 1, 2, 4, 8, 16, 32, 64, 128],
    registry=REGISTRY
)

LP_LATENCY = Histogram(
    'thetalab_lp_solve_seconds',
    'Exact LP solve latency in seconds',
    ['sign_mode'],
    buckets=[0.001, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0],
    registry=REGISTRY
)

# ============================================================================
# Scheme / Graph Metrics
# ============================================================================

SCHEME_BUILDS = Counter(
    'thetalab_scheme_builds_total',
    'Johnson scheme tables built (cache misses)',
    registry=REGISTRY
)

ALPHA_NODES = Counter(
    'thetalab_alpha_nodes_total',
    'Branch-and-bound nodes expanded',
    registry=REGISTRY
)


@contextmanager
def lp_timer(sign_mode: str) -> Iterator[None]:
    """Observe the wall time of an LP solve."""
    start = time.perf_counter()
    try:
        yield
    finally:
        LP_LATENCY.labels(sign_mode=sign_mode).observe(time.perf_counter() - start)


def export_metrics() -> bytes:
    """Text exposition of the registry."""
    return generate_latest(REGISTRY)


def write_metrics(path: Path) -> None:
    """Write the text exposition to a file."""
    path.write_bytes(export_metrics())
    logger.info(f"Metrics written to {path}")
