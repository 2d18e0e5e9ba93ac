"""
Logging utilities for grundylab.

Small helpers that keep log lines about graphs short and uniform.
"""

import logging
import time
from contextlib import contextmanager
from typing import Iterator

# Configure logging
logger = logging.getLogger(__name__)


def describe_graph(g) -> str:
    """
    Render a compact tag for a graph, e.g. ``petersen(n=10, m=15)``.

    Args:
        g: Graph to describe

    Returns:
        Short description used in log messages
    """
    name = g.label or "graph"
    return f"{name}(n={g.n}, m={g.edge_count})"


@contextmanager
def log_timing(what: str, log: logging.Logger = logger) -> Iterator[None]:
    """Log the wall time of the enclosed block at DEBUG level."""
    start = time.perf_counter()
    try:
        yield
    finally:
        log.debug(f"{what} took {time.perf_counter() - start:.3f}s")
