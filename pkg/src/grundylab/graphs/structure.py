"""
Structural queries on graphs: connectivity, regularity, girth, twins,
bridges, and the small subgraph tests used by the cubic case analysis.
"""

import enum
import logging
import math
from collections import deque
from typing import List, Optional, Tuple, Union

from grundylab.graphs.graph import EdgeList, Graph, iter_bits

# Configure logging
logger = logging.getLogger(__name__)


class TwinKind(str, enum.Enum):
    """Kinds of twin pairs."""

    CLOSED = "closed"
    OPEN = "open"


def components(g: Graph) -> List[int]:
    """Connected components as vertex bitmasks, ordered by smallest vertex."""
    seen = 0
    result = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        component = 1 << start
        frontier = component
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.rows[v]
            frontier = reach & ~component
            component |= frontier
        seen |= component
        result.append(component)
    return result


def is_connected(g: Graph) -> bool:
    """A graph is connected when it has exactly one component (the empty graph is not)."""
    return len(components(g)) == 1


def regularity(g: Graph) -> Optional[int]:
    """The common degree of a regular graph, ``None`` otherwise."""
    degrees = set(g.degrees())
    if len(degrees) == 1:
        return degrees.pop()
    return None


def is_k_regular(g: Graph, k: int) -> bool:
    return g.n > 0 and all(row.bit_count() == k for row in g.rows)


def is_complete(g: Graph) -> bool:
    return is_k_regular(g, g.n - 1) if g.n > 1 else g.n == 1


def girth(g: Graph) -> Union[int, float]:
    """
    Length of a shortest cycle, ``math.inf`` for forests.

    Breadth-first search from every vertex; a non-tree edge ``uw`` closes a
    cycle of length at most ``dist[u] + dist[w] + 1``, and the minimum over
    all roots is exact.
    """
    best: Union[int, float] = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in iter_bits(g.rows[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.rows[u]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def shortest_odd_cycle(g: Graph) -> Optional[List[int]]:
    """
    A shortest odd cycle as a list of vertices in cyclic order, or ``None``
    for bipartite graphs.
    """
    best: Optional[List[int]] = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for w in iter_bits(g.rows[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif dist[w] == dist[u] and u < w:
                    left = _path_to_root(parent, u)
                    right = _path_to_root(parent, w)
                    # Both paths end at the root; a shortest odd cycle is only
                    # found when they are otherwise disjoint
                    if set(left[:-1]).isdisjoint(right[:-1]):
                        cycle = list(reversed(left)) + right[:-1]
                        if best is None or len(cycle) < len(best):
                            best = cycle
    return best


def _path_to_root(parent: dict, v: int) -> List[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def find_twins(g: Graph) -> List[Tuple[int, int, TwinKind]]:
    """
    All twin pairs ``(u, v, kind)`` with ``u < v``.

    Closed twins share ``N[u] = N[v]`` (so they are adjacent), open twins
    share ``N(u) = N(v)`` (so they are not); a pair is never both.
    """
    closed = g.closed_rows()
    twins = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if closed[u] == closed[v]:
                twins.append((u, v, TwinKind.CLOSED))
            elif g.rows[u] == g.rows[v]:
                twins.append((u, v, TwinKind.OPEN))
    return twins


def are_twins(g: Graph, u: int, v: int) -> bool:
    return g.closed_row(u) == g.closed_row(v) or g.rows[u] == g.rows[v]


def bridges(g: Graph) -> EdgeList:
    """
    Cut edges, by an iterative low-link depth-first search.

    Returns:
        Bridges as ``(u, v)`` pairs with ``u < v``, sorted
    """
    order = [-1] * g.n
    low = [0] * g.n
    found: EdgeList = []
    counter = 0
    for root in range(g.n):
        if order[root] >= 0:
            continue
        order[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, list(iter_bits(g.rows[root])))]
        while stack:
            v, parent, pending = stack[-1]
            if pending:
                w = pending.pop()
                if w == parent:
                    continue
                if order[w] < 0:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, list(iter_bits(g.rows[w]))))
                else:
                    low[v] = min(low[v], order[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > order[parent]:
                        found.append((min(v, parent), max(v, parent)))
    return sorted(found)


def has_triangle(g: Graph) -> bool:
    return any(g.rows[u] & g.rows[v] for u, v in g.edges())


def has_diamond(g: Graph) -> bool:
    """K4 - e as a subgraph: an edge whose endpoints have two common neighbours."""
    return any((g.rows[u] & g.rows[v]).bit_count() >= 2 for u, v in g.edges())


def has_Y_subgraph(g: Graph) -> bool:
    """
    Y as a subgraph: an edge ``rs`` with two common neighbours ``p, q``
    that share a further common neighbour ``t`` outside ``{r, s}``.
    """
    for r, s in g.edges():
        common = list(iter_bits(g.rows[r] & g.rows[s]))
        for i, p in enumerate(common):
            for q in common[i + 1:]:
                if (g.rows[p] & g.rows[q]) & ~((1 << r) | (1 << s)):
                    return True
    return False


def degree_sequence(g: Graph) -> List[int]:
    """Vertex degrees in non-increasing order."""
    return sorted(g.degrees(), reverse=True)


def shortest_cycle_through(g: Graph, v: int) -> Optional[List[int]]:
    """
    A shortest cycle containing ``v``, starting at ``v``, or ``None``.

    A non-tree edge ``uw`` whose endpoints hang below different neighbours of
    ``v`` closes a cycle through ``v`` of length ``dist[u] + dist[w] + 1``.
    """
    dist = {v: 0}
    parent = {v: -1}
    branch = {v: -1}
    queue = deque([v])
    best: Optional[Tuple[int, int, int]] = None
    while queue:
        u = queue.popleft()
        for w in iter_bits(g.rows[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                branch[w] = w if u == v else branch[u]
                queue.append(w)
            elif w != parent[u] and u != v and w != v and branch[u] != branch[w]:
                length = dist[u] + dist[w] + 1
                if best is None or length < best[0]:
                    best = (length, u, w)
    if best is None:
        return None
    _, u, w = best
    return list(reversed(_path_to_root(parent, u))) + _path_to_root(parent, w)[:-1]
