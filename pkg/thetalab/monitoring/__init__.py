"""Monitoring and observability package."""
from thetalab.monitoring.metrics import (
    REGISTRY,
    export_metrics,
    write_metrics,
)

__all__ = [
    "REGISTRY",
    "export_metrics",
    "write_metrics",
]
