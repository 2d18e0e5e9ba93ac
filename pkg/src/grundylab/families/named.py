"""
Constructors for the named graphs of the cubic Grundy domination catalog.

Vertex numbering is fixed for every constructor so that witnesses and golden
values stay reproducible.
"""

import logging
from itertools import combinations
from typing import List

from grundylab.graphs.graph import Edge, Graph, build_graph, complement, disjoint_union
from grundylab.utils.error_handler import GraphError

# Configure logging
logger = logging.getLogger(__name__)


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"A cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], label=f"C{n}")


def make_path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"A path needs at least 1 vertex, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], label=f"P{n}")


def make_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"A complete graph needs at least 1 vertex, got {n}")
    return build_graph(n, combinations(range(n), 2), label=f"K{n}")


def make_complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise GraphError(f"Both parts of K_(a,b) must be non-empty, got {a} and {b}")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return build_graph(a + b, edges, label=f"K{a},{b}")


def make_diamond() -> Graph:
    """``K_4`` minus the edge ``23``."""
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], label="diamond")


def make_co_2c4() -> Graph:
    """Complement of two disjoint 4-cycles: a 5-regular graph on 8 vertices."""
    two_squares = disjoint_union(make_cycle(4), make_cycle(4))
    return complement(two_squares, label="co_2C4")


def make_prism() -> Graph:
    """``K_3 [] K_2``: triangles ``{0,1,2}`` and ``{3,4,5}`` matched by ``i -- i+3``."""
    edges: List[Edge] = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    edges += [(i, i + 3) for i in range(3)]
    return build_graph(6, edges, label="K3xK2")


def make_cube() -> Graph:
    """``Q_3``: vertices are 3-bit words, adjacent when they differ in one bit."""
    edges = [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    return build_graph(8, edges, label="Q3")


def make_twisted_cube() -> Graph:
    """
    ``TQ_3``: 4-cycles ``a b c d`` (0..3) and ``a' b' c' d'`` (4..7) joined by
    ``aa'``, ``bb'``, ``cd'`` and ``dc'``.
    """
    a, b, c, d = 0, 1, 2, 3
    a2, b2, c2, d2 = 4, 5, 6, 7
    edges = [
        (a, b), (b, c), (c, d), (d, a),
        (a2, b2), (b2, c2), (c2, d2), (d2, a2),
        (a, a2), (b, b2), (c, d2), (d, c2),
    ]
    return build_graph(8, edges, label="TQ3")


def make_tk() -> Graph:
    """The 8-vertex graph TK: a triangle ``x y z`` joined to a 5-vertex block."""
    x, y, z, u, v, v1, v2, w = range(8)
    edges = [
        (x, y), (y, z), (z, x),
        (w, v1), (v1, v), (v, v2), (v2, u), (v1, u), (v2, w),
        (x, u), (y, v), (z, w),
    ]
    return build_graph(8, edges, label="TK")


def make_petersen() -> Graph:
    """Outer 5-cycle ``0..4``, spokes ``i -- i+5``, inner pentagram."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return build_graph(10, edges, label="Petersen")


def make_necklace_xx() -> Graph:
    a, b, c, d, e, e1, a1, a2, b1, c1, d1, d2 = range(12)
    edges = [
        (a, b), (a, d), (a, e1), (b, c), (b, e), (c, e1), (c, d), (d, e),
        (d2, a1), (a1, b1), (d1, c1), (e1, c1), (e, b1), (a1, d1),
        (d1, a2), (b1, a2), (a2, d2), (d2, c1),
    ]
    return build_graph(12, edges, label="N_XX")


def make_necklace_xy() -> Graph:
    k, l, m, n, k1, k2, l1, m1, n1, n2 = range(10)
    edges = [
        (k, l), (l, n), (n, m), (m, k), (k, n),
        (k1, l1), (l1, k2), (n1, m1), (m1, n2),
        (l, l1), (m, m1),
        (n2, k1), (k1, n1), (n2, k2), (k2, n1),
    ]
    return build_graph(10, edges, label="N_XY")


def make_necklace_yy() -> Graph:
    """Two diamonds ``k l m n`` and ``k' l' m' n'`` joined by ``ll'`` and ``mm'``."""
    k, l, m, n, k1, l1, m1, n1 = range(8)
    edges = [
        (k, l), (l, n), (n, m), (m, k), (k, n),
        (k1, l1), (l1, n1), (n1, m1), (m1, k1), (k1, n1),
        (l, l1), (m, m1),
    ]
    return build_graph(8, edges, label="N_YY")
