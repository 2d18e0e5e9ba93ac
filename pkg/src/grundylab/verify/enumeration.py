"""
Graph streams for the verification harness: a built-in generator of the
connected cubic graphs of small order, and graph6 file ingestion for larger
orders.
"""

import logging
from pathlib import Path
from typing import Iterator, List, Union

from grundylab.graphs.graph import Graph
from grundylab.graphs.graph6 import graph6_decode
from grundylab.graphs.isomorphism import isomorphism_classes
from grundylab.graphs.structure import is_connected, is_k_regular
from grundylab.utils.error_handler import Graph6Error, VerificationInputError, handle_errors
from grundylab.utils.log_utils import log_timing

# Configure logging
logger = logging.getLogger(__name__)

MAX_BUILTIN_ORDER = 10


def _labeled_cubic(n: int) -> Iterator[List[int]]:
    """
    Labeled connected cubic graphs in which vertices are touched in label order.

    The smallest vertex short of degree three is always completed next, with
    new neighbours in increasing order; of the vertices not touched yet only
    the smallest may be used. Every connected cubic graph has such a
    labelling, so every isomorphism class appears at least once.
    """
    rows = [0] * n
    degree = [0] * n

    def fill() -> Iterator[List[int]]:
        u = next((v for v in range(n) if degree[v] < 3), None)
        if u is None:
            yield list(rows)
            return
        if degree[u] == 0 and u > 0:
            # Every touched vertex is full: the component is closed
            return
        yield from extend(u, max(u, rows[u].bit_length() - 1))

    def extend(u: int, floor: int) -> Iterator[List[int]]:
        if degree[u] == 3:
            yield from fill()
            return
        need = 3 - degree[u]
        fresh_used = False
        for w in range(floor + 1, n):
            if degree[w] >= 3:
                continue
            if degree[w] == 0:
                if fresh_used:
                    break
                fresh_used = True
            if sum(1 for x in range(w, n) if degree[x] < 3) < need:
                break
            rows[u] |= 1 << w
            rows[w] |= 1 << u
            degree[u] += 1
            degree[w] += 1
            yield from extend(u, w)
            rows[u] &= ~(1 << w)
            rows[w] &= ~(1 << u)
            degree[u] -= 1
            degree[w] -= 1

    yield from fill()


@handle_errors
def enumerate_cubic(n: int, dedup: bool = True) -> List[Graph]:
    """
    Connected cubic graphs of order ``n``.

    Args:
        n: Even order between 4 and 10
        dedup: Keep one representative per isomorphism class

    Returns:
        Every class at least once; exactly once with ``dedup``

    Raises:
        VerificationInputError: On odd ``n`` or ``n`` outside the built-in range
    """
    if n % 2:
        raise VerificationInputError(f"Cubic graphs need an even order, got {n}")
    if not 4 <= n <= MAX_BUILTIN_ORDER:
        raise VerificationInputError(
            f"Built-in enumeration covers orders 4..{MAX_BUILTIN_ORDER}; ingest a graph6 file for n={n}"
        )
    with log_timing(f"Cubic enumeration n={n}", logger):
        graphs = []
        for rows in _labeled_cubic(n):
            g = Graph(n=n, rows=tuple(rows), label=f"cubic{n}_{len(graphs)}")
            if is_connected(g):
                graphs.append(g)
        labeled = len(graphs)
        if dedup:
            graphs = isomorphism_classes(graphs)
    logger.info(f"Enumerated {labeled} labeled connected cubic graphs on {n} vertices, {len(graphs)} kept")
    return [g.with_label(f"cubic{n}_{i}") for i, g in enumerate(graphs)]


@handle_errors
def ingest_cubic_file(path: Union[str, Path]) -> List[Graph]:
    """
    Read connected cubic graphs from a graph6 file.

    Blank lines and ``#`` comment lines are ignored; every other line must
    decode to a connected cubic graph.

    Raises:
        VerificationInputError: On a line that fails to decode or is not a
            connected cubic graph
    """
    path = Path(path)
    graphs = []
    with open(path, "r", encoding="ascii", errors="surrogateescape") as handle:
        for number, line in enumerate(handle, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            try:
                g = graph6_decode(text, label=f"{path.stem}:{number}")
            except Graph6Error as e:
                raise VerificationInputError(f"{path}:{number}: {e.message}")
            if not is_k_regular(g, 3):
                raise VerificationInputError(f"{path}:{number}: graph is not cubic")
            if not is_connected(g):
                raise VerificationInputError(f"{path}:{number}: graph is not connected")
            graphs.append(g)
    logger.info(f"Ingested {len(graphs)} cubic graphs from {path}")
    return graphs
