"""
Graph isomorphism for small graphs.

Colour refinement (degree first, then sorted neighbour-colour multisets) run
jointly on both graphs, followed by backtracking over colour classes. Good
enough for the catalog orders used here; no canonical labelling is
attempted.
"""

import logging
from collections import Counter, defaultdict
from typing import Dict, Hashable, Iterable, List, Optional, Tuple

from grundylab.graphs.graph import Graph, iter_bits
from grundylab.graphs.structure import bridges, girth

# Configure logging
logger = logging.getLogger(__name__)


def _refine_jointly(first: Graph, second: Graph) -> Tuple[List[int], List[int]]:
    colours = [first.degrees(), second.degrees()]
    graphs = (first, second)
    classes = len(set(colours[0]) | set(colours[1]))
    while True:
        signatures = [
            [
                (colour[v], tuple(sorted(colour[u] for u in iter_bits(g.rows[v]))))
                for v in range(g.n)
            ]
            for g, colour in zip(graphs, colours)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures[0]) | set(signatures[1])))}
        colours = [[palette[sig] for sig in sigs] for sigs in signatures]
        refined = len(palette)
        if refined == classes:
            return colours[0], colours[1]
        classes = refined


def _matching_order(g: Graph, colour: List[int], class_size: Dict[int, int]) -> List[int]:
    """Rarest colour first, then always the vertex with the most already-ordered neighbours."""
    order: List[int] = []
    placed = 0
    remaining = set(range(g.n))
    while remaining:
        v = min(
            remaining,
            key=lambda x: (-(g.rows[x] & placed).bit_count(), class_size[colour[x]], x),
        )
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def find_isomorphism(g: Graph, h: Graph) -> Optional[Tuple[int, ...]]:
    """
    Search for an isomorphism from ``g`` to ``h``.

    Returns:
        A tuple ``phi`` with ``phi[v]`` the image of vertex ``v``, or ``None``
        when the graphs are not isomorphic
    """
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    colour_g, colour_h = _refine_jointly(g, h)
    histogram = Counter(colour_g)
    if histogram != Counter(colour_h):
        return None

    by_colour: Dict[int, List[int]] = defaultdict(list)
    for v, c in enumerate(colour_h):
        by_colour[c].append(v)
    order = _matching_order(g, colour_g, histogram)
    image = [-1] * g.n

    def extend(depth: int, used: int, mapped_g: int) -> bool:
        if depth == g.n:
            return True
        u = order[depth]
        mapped_neighbours = g.rows[u] & mapped_g
        needed = 0
        for a in iter_bits(mapped_neighbours):
            needed |= 1 << image[a]
        for c in by_colour[colour_g[u]]:
            if used >> c & 1:
                continue
            if h.rows[c] & used != needed:
                continue
            image[u] = c
            if extend(depth + 1, used | (1 << c), mapped_g | (1 << u)):
                return True
        image[u] = -1
        return False

    if not extend(0, 0, 0):
        return None
    return tuple(image)


def isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def isomorphism_key(g: Graph) -> Hashable:
    """An isomorphism invariant used to bucket graphs before pairwise testing."""
    local = tuple(sorted(
        (g.degree(v), tuple(sorted(g.degree(u) for u in iter_bits(g.rows[v]))))
        for v in range(g.n)
    ))
    triangles = sum((g.rows[u] & g.rows[v]).bit_count() for u, v in g.edges()) // 3
    return (g.n, g.edge_count, local, triangles, girth(g), len(bridges(g)))


def isomorphism_classes(graphs: Iterable[Graph]) -> List[Graph]:
    """Keep the first graph of every isomorphism class, preserving input order."""
    buckets: Dict[Hashable, List[Graph]] = defaultdict(list)
    representatives: List[Graph] = []
    for g in graphs:
        bucket = buckets[isomorphism_key(g)]
        if any(isomorphic(g, other) for other in bucket):
            continue
        bucket.append(g)
        representatives.append(g)
    return representatives
