"""
Immutable simple graphs with bit-packed neighbourhoods.

Vertices are the dense integers ``0..n-1``. Row ``v`` of the adjacency is a
Python ``int`` whose bit ``u`` is set iff ``uv`` is an edge; Python integers
grow past the machine word, so orders above 64 simply use multi-word rows.
"""

import logging
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, model_validator

from grundylab.utils.error_handler import GraphError, handle_errors

# Configure logging
logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
EdgeList = List[Edge]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> List[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph(BaseModel):
    """
    A finite simple undirected graph.

    Attributes:
        n: Number of vertices
        rows: Bit-packed open neighbourhood of every vertex
        label: Optional short name used in reports and logs
    """

    model_config = ConfigDict(frozen=True)

    n: int
    rows: Tuple[int, ...]
    label: Optional[str] = None

    @model_validator(mode="after")
    def _check_adjacency(self) -> "Graph":
        if self.n < 0:
            raise GraphError(f"Negative vertex count: {self.n}")
        if len(self.rows) != self.n:
            raise GraphError(f"Expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise GraphError(f"Row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"Loop at vertex {v}")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"Asymmetric adjacency between {v} and {u}")
        return self

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    def neighbors(self, v: int) -> List[int]:
        return bits_to_list(self.rows[v])

    def closed_row(self, v: int) -> int:
        """N[v] as a bitmask."""
        return self.rows[v] | (1 << v)

    def closed_rows(self) -> List[int]:
        return [row | (1 << v) for v, row in enumerate(self.rows)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> EdgeList:
        """All edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def isolated_vertices(self) -> List[int]:
        return [v for v, row in enumerate(self.rows) if row == 0]

    def with_label(self, label: Optional[str]) -> "Graph":
        return Graph(n=self.n, rows=self.rows, label=label)

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        if self.label:
            nx_graph.graph["name"] = self.label
        return nx_graph

    def __repr__(self) -> str:
        return f"Graph(label={self.label!r}, n={self.n}, m={self.edge_count})"


@handle_errors
def build_graph(n: int, edges: Iterable[Sequence[int]], label: Optional[str] = None) -> Graph:
    """
    Build a graph from an edge list.

    Args:
        n: Number of vertices
        edges: Pairs of endpoints; duplicates (in either orientation) are collapsed
        label: Optional name

    Returns:
        The graph with the symmetric closure of ``edges``

    Raises:
        GraphError: On an endpoint outside ``0..n-1`` or a loop
    """
    if n < 0:
        raise GraphError(f"Negative vertex count: {n}")
    rows = [0] * n
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"Loop edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n=n, rows=tuple(rows), label=label)


def graph_from_networkx(nx_graph: nx.Graph, label: Optional[str] = None) -> Graph:
    """Convert a networkx graph, relabelling its nodes in sorted order to ``0..n-1``."""
    nodes = sorted(nx_graph.nodes())
    index: Dict = {node: i for i, node in enumerate(nodes)}
    edges = [(index[a], index[b]) for a, b in nx_graph.edges() if a != b]
    return build_graph(len(nodes), edges, label=label or nx_graph.graph.get("name") or None)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Tuple[Graph, List[int]]:
    """
    Induced subgraph on ``vertices``.

    Returns:
        The subgraph (vertices renumbered by increasing original index) and the
        list mapping new indices back to original vertices
    """
    keep = sorted(set(vertices))
    position = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.rows[v]):
            if u in position:
                row |= 1 << position[u]
        rows.append(row)
    return Graph(n=len(keep), rows=tuple(rows)), keep


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``permutation[v]``."""
    if sorted(permutation) != list(range(g.n)):
        raise GraphError("Relabelling is not a permutation of the vertex set")
    rows = [0] * g.n
    for v in range(g.n):
        rows[permutation[v]] = mask_of(permutation[u] for u in iter_bits(g.rows[v]))
    return Graph(n=g.n, rows=tuple(rows), label=g.label)


def complement(g: Graph, label: Optional[str] = None) -> Graph:
    full = g.full_mask
    rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows))
    return Graph(n=g.n, rows=rows, label=label)


def disjoint_union(first: Graph, second: Graph, label: Optional[str] = None) -> Graph:
    shift = first.n
    rows = list(first.rows) + [row << shift for row in second.rows]
    return Graph(n=first.n + second.n, rows=tuple(rows), label=label)
