"""
graph6 interchange.

One graph per line. The size header is ``n + 63`` for ``n <= 62`` and
``'~'`` followed by three 6-bit groups for ``63 <= n <= 258047``. The upper
triangle is written column by column, ``(0,1), (0,2), (1,2), (0,3), ...``,
packed big-endian into 6-bit groups, each offset by 63.
"""

import logging
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Union

from grundylab.graphs.graph import Graph
from grundylab.utils.error_handler import Graph6Error, handle_errors

# Configure logging
logger = logging.getLogger(__name__)

SMALL_ORDER_LIMIT = 62
MEDIUM_ORDER_LIMIT = 258047
HEADER_PREFIX = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= SMALL_ORDER_LIMIT:
        return chr(n + 63)
    if n <= MEDIUM_ORDER_LIMIT:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    raise Graph6Error(f"Order {n} exceeds the supported graph6 header range")


def _decode_order(data: bytes) -> tuple:
    """Return ``(n, header_length)``."""
    if not data:
        raise Graph6Error("Empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise Graph6Error("8-byte graph6 size headers are not supported")
    if len(data) < 4:
        raise Graph6Error("Truncated graph6 size header")
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - 63)
    if n <= SMALL_ORDER_LIMIT:
        raise Graph6Error(f"Non-minimal graph6 size header for n={n}")
    return n, 4


@handle_errors
def graph6_encode(g: Graph) -> str:
    """
    Encode a labelled graph as a graph6 line (without the trailing newline).

    Raises:
        Graph6Error: If the order exceeds the supported header range
    """
    parts = [_encode_order(g.n)]
    group = 0
    filled = 0
    for column in range(1, g.n):
        row = g.rows[column]
        for above in range(column):
            group = (group << 1) | (row >> above & 1)
            filled += 1
            if filled == 6:
                parts.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        parts.append(chr((group << (6 - filled)) + 63))
    return "".join(parts)


@handle_errors
def graph6_decode(text: Union[str, bytes], label: Optional[str] = None) -> Graph:
    """
    Decode one graph6 line.

    Args:
        text: graph6 encoding; surrounding whitespace and an optional
            ``>>graph6<<`` prefix are ignored
        label: Optional name for the decoded graph

    Returns:
        The graph with exactly the encoded adjacency

    Raises:
        Graph6Error: Bad length, characters outside 63..126 or a malformed header
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as e:
            raise Graph6Error(f"Non-ASCII byte at offset {e.start} in graph6 input")
    text = text.strip()
    if text.startswith(HEADER_PREFIX):
        text = text[len(HEADER_PREFIX):]
    if not text.isascii():
        raise Graph6Error(f"Non-ASCII character in graph6 string {text!r}")
    data = text.encode("ascii")
    if any(byte < 63 or byte > 126 for byte in data):
        raise Graph6Error(f"Character outside the printable graph6 range in {text!r}")
    n, offset = _decode_order(data)
    pairs = n * (n - 1) // 2
    expected = (pairs + 5) // 6
    body = data[offset:]
    if len(body) != expected:
        raise Graph6Error(f"Expected {expected} data bytes for n={n}, got {len(body)}")

    rows = [0] * n
    bit_index = 0
    column, above = 1, 0
    for byte in body:
        value = byte - 63
        for shift in range(5, -1, -1):
            if bit_index >= pairs:
                if value >> shift & 1:
                    raise Graph6Error("Non-zero padding bits in graph6 string")
                continue
            if value >> shift & 1:
                rows[column] |= 1 << above
                rows[above] |= 1 << column
            bit_index += 1
            above += 1
            if above == column:
                column += 1
                above = 0
    return Graph(n=n, rows=tuple(rows), label=label)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """
    Decode a stream of graph6 lines.

    Blank lines and lines starting with ``#`` are skipped.
    """
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            yield graph6_decode(stripped)
        except Graph6Error as e:
            raise Graph6Error(f"Line {number}: {e.message}", details=stripped) from e


def read_graph6_file(path: Union[str, Path]) -> List[Graph]:
    """Read every graph of a graph6 file (comment lines ignored)."""
    path = Path(path)
    # Undecodable bytes survive as surrogates and fail graph6 validation per line
    with path.open("r", encoding="ascii", errors="surrogateescape") as handle:
        graphs = list(read_graph6_lines(handle))
    logger.info(f"Read {len(graphs)} graphs from {path}")
    return graphs


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    """Encode graphs as newline-terminated graph6 text."""
    return "".join(graph6_encode(g) + "\n" for g in graphs)
