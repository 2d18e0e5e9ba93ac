"""
Proof-guided constructions of long closed neighbourhood sequences and
Z-sequences.

Every construction here extends a short, carefully chosen start by the
minimum-footprint rule: among the vertices that footprint at least one
vertex (a vertex other than themselves for Z-sequences), take one that
footprints the fewest, preferring vertices that are already dominated, then
the lowest index.
"""

import logging
import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from grundylab.domination.bounds import grundy_regular_lower_bound, zgrundy_regular_lower_bound
from grundylab.domination.sequences import (
    Variant, VertexSequence, footprints, is_valid,
)
from grundylab.families.family_m import FamilyMDecomposition, UnitKind
from grundylab.families.named import make_co_2c4
from grundylab.graphs.graph import Graph, iter_bits
from grundylab.graphs.structure import (
    are_twins, has_triangle, is_bipartite, is_complete, is_connected,
    is_k_regular, regularity, shortest_odd_cycle,
)
from grundylab.graphs.isomorphism import isomorphic
from grundylab.utils.config import DEFAULT_SOLVER_CONFIG, SolverConfig
from grundylab.utils.error_handler import BoundError, FamilyError, GraphError, SequenceError, handle_errors
from grundylab.utils.log_utils import describe_graph

# Configure logging
logger = logging.getLogger(__name__)


class _PrefixBudgetExceeded(Exception):
    pass


@handle_errors
def theorem21_start_pair(g: Graph) -> Optional[Tuple[int, int]]:
    """
    Start pair for graphs with triangles: an adjacent pair of non-twins with
    the most common neighbours.

    Args:
        g: Connected graph with a triangle that is not complete

    Returns:
        The lexicographically first maximizing pair ``(v1, v2)`` with
        ``v1 < v2``, or ``None`` when no adjacent non-twin pair has a common
        neighbour

    Raises:
        GraphError: If ``g`` is disconnected, triangle-free or complete
    """
    if not is_connected(g):
        raise GraphError(f"Start pair needs a connected graph, got {describe_graph(g)}")
    if is_complete(g):
        raise GraphError(f"Start pair is undefined on the complete graph {describe_graph(g)}")
    if not has_triangle(g):
        raise GraphError(f"Start pair needs a triangle, {describe_graph(g)} has none")

    best: Optional[Tuple[int, int]] = None
    best_common = 0
    for u, v in g.edges():
        if are_twins(g, u, v):
            continue
        common = (g.rows[u] & g.rows[v]).bit_count()
        if common > best_common:
            best, best_common = (u, v), common
    return best


def _check_start(g: Graph, variant: Variant, start: Sequence[int]) -> VertexSequence:
    if variant == Variant.ZGRUNDY and g.isolated_vertices():
        raise SequenceError(f"Z-sequences need a graph without isolated vertices: {describe_graph(g)}")
    prefix = footprints(g, start)
    if not is_valid(prefix, variant):
        raise SequenceError(f"Start {list(start)} is not a valid {variant.value} sequence prefix")
    return prefix


def _extend(g: Graph, variant: Variant, order: List[int], dominated: int) -> List[int]:
    while True:
        best = -1
        best_key: Optional[Tuple[int, int, int]] = None
        for v in range(g.n):
            footprint = (g.rows[v] | (1 << v)) & ~dominated
            if not footprint:
                continue
            if variant == Variant.ZGRUNDY and not g.rows[v] & ~dominated:
                continue
            key = (footprint.bit_count(), 0 if dominated >> v & 1 else 1, v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        if best_key is None:
            return order
        order.append(best)
        dominated |= g.rows[best] | (1 << best)


@handle_errors
def greedy_min_footprint(
    g: Graph,
    variant: Variant = Variant.GRUNDY,
    start: Optional[Sequence[int]] = None,
) -> VertexSequence:
    """
    Extend ``start`` to a dominating sequence by the minimum-footprint rule.

    Args:
        g: Graph (connected in the intended use)
        variant: Closed neighbourhood sequence or Z-sequence
        start: Optional valid prefix of the chosen variant

    Returns:
        A valid dominating sequence of ``variant`` extending ``start``

    Raises:
        SequenceError: If ``start`` is not a valid prefix, or a Z-sequence is
            asked for on a graph with isolated vertices
    """
    prefix = _check_start(g, Variant(variant), list(start or []))
    order = _extend(g, Variant(variant), list(prefix.order), prefix.dominated)
    return footprints(g, order)


@handle_errors
def odd_cycle_start(g: Graph) -> Optional[List[int]]:
    """
    Start sequence for triangle-free graphs taken from a shortest odd cycle.

    If a vertex off the cycle has two neighbours on it, the start is the
    shorter cycle arc between the closest such pair of neighbours; otherwise
    it is the whole cycle in cyclic order. Either way every start vertex
    footprints its successor on the cycle or a private outside neighbour.

    Returns:
        The start, or ``None`` for bipartite graphs

    Raises:
        GraphError: If ``g`` has a triangle
    """
    if has_triangle(g):
        raise GraphError(f"Odd-cycle start needs a triangle-free graph, {describe_graph(g)} has a triangle")
    cycle = shortest_odd_cycle(g)
    if cycle is None:
        return None
    size = len(cycle)
    position = {v: i for i, v in enumerate(cycle)}

    best: Optional[Tuple[int, int, int, int]] = None
    for x in range(g.n):
        if x in position:
            continue
        hits = [position[w] for w in iter_bits(g.rows[x]) if w in position]
        for a in range(len(hits)):
            for b in range(a + 1, len(hits)):
                i, j = hits[a], hits[b]
                gap = min((j - i) % size, (i - j) % size)
                key = (gap, x, i, j)
                if best is None or key < best:
                    best = key
    if best is None:
        return list(cycle)
    gap, _, i, j = best
    step = 1 if (j - i) % size == gap else -1
    return [cycle[(i + step * t) % size] for t in range(gap + 1)]


@handle_errors
def zgrundy_cubic_prefix(g: Graph, config: SolverConfig = DEFAULT_SOLVER_CONFIG) -> Optional[List[int]]:
    """
    Search a Z-sequence prefix in a cubic graph where every vertex after the
    first footprints at most two vertices and two of them footprint exactly one.

    Extending such a prefix by the minimum-footprint rule keeps every later
    footprint at most two, so the resulting Z-sequence has length at least
    ``n/2``. Candidates are tried smallest footprint first; dead states
    (dominated set, single count) are remembered.

    Args:
        g: Connected cubic graph
        config: Supplies the node budget

    Returns:
        The prefix, or ``None`` if none exists or the budget runs out

    Raises:
        GraphError: If ``g`` is not cubic
    """
    if not is_k_regular(g, 3):
        raise GraphError(f"Prefix search needs a cubic graph, got {describe_graph(g)}")
    closed = g.closed_rows()
    dead = set()
    nodes = 0

    def search(order: List[int], dominated: int, singles: int) -> Optional[List[int]]:
        nonlocal nodes
        if singles >= 2:
            return list(order)
        if (dominated, singles) in dead:
            return None
        nodes += 1
        if nodes > config.prefix_search_node_limit:
            raise _PrefixBudgetExceeded()
        candidates = []
        for v in range(g.n):
            if not g.rows[v] & ~dominated:
                continue
            size = (closed[v] & ~dominated).bit_count()
            if size <= 2:
                candidates.append((size, v))
        for size, v in sorted(candidates):
            order.append(v)
            found = search(order, dominated | closed[v], singles + (size == 1))
            if found is not None:
                return found
            order.pop()
        dead.add((dominated, singles))
        return None

    try:
        for first in range(g.n):
            found = search([first], closed[first], 0)
            if found is not None:
                return found
    except _PrefixBudgetExceeded:
        logger.warning(
            f"Prefix search on {describe_graph(g)} stopped after {config.prefix_search_node_limit} nodes"
        )
    return None


def _is_k33(g: Graph) -> bool:
    return g.n == 6 and is_k_regular(g, 3) and is_bipartite(g)


def _bound_target(g: Graph, variant: Variant) -> Optional[int]:
    """Length the regular-graph lower bounds promise for ``g``, or ``None`` where none applies."""
    k = regularity(g)
    if k is None or k < 3 or not is_connected(g) or is_complete(g):
        return None
    if variant == Variant.GRUNDY:
        if g.n == 8 and isomorphic(g, make_co_2c4()):
            return None
        return math.ceil(grundy_regular_lower_bound(g.n, k))
    target = math.ceil(zgrundy_regular_lower_bound(g.n, k, has_triangle(g)))
    if k == 3 and not _is_k33(g):
        target = max(target, math.ceil(Fraction(g.n, 2)))
    return target


def _third_vertices(g: Graph, v1: int, v2: int) -> List[int]:
    """
    Neighbours of the start pair that still reach a vertex outside both
    closed neighbourhoods, common neighbours first.
    """
    reach = (g.rows[v1] | g.rows[v2]) | (1 << v1) | (1 << v2)
    common = g.rows[v1] & g.rows[v2]
    side = (g.rows[v1] | g.rows[v2]) & ~common & ~((1 << v1) | (1 << v2))
    return [x for group in (common, side) for x in iter_bits(group) if g.rows[x] & ~reach]


def _primary_starts(g: Graph, variant: Variant, config: SolverConfig) -> List[List[int]]:
    starts: List[List[int]] = []
    connected = is_connected(g)
    if variant == Variant.ZGRUNDY and connected and is_k_regular(g, 3) and g.n > 4 and not _is_k33(g):
        prefix = zgrundy_cubic_prefix(g, config)
        if prefix is not None:
            starts.append(prefix)
    if connected and has_triangle(g) and not is_complete(g):
        pair = theorem21_start_pair(g)
        if pair is not None:
            v1, v2 = pair
            starts.append([v1, v2])
            starts.extend([v1, v2, x] for x in _third_vertices(g, v1, v2))
            starts.append([v2, v1])
    elif connected and g.n > 0 and not has_triangle(g):
        cycle_start = odd_cycle_start(g)
        if cycle_start is not None:
            starts.append(cycle_start)
    starts.append([])
    return starts


def _fallback_starts(g: Graph) -> List[List[int]]:
    """Every single vertex, then every ordered edge."""
    starts = [[v] for v in range(g.n)]
    for u, v in g.edges():
        starts.extend([[u, v], [v, u]])
    return starts


def _longest(g: Graph, variant: Variant, starts: Sequence[Sequence[int]]) -> Optional[VertexSequence]:
    best: Optional[VertexSequence] = None
    for start in starts:
        if not is_valid(footprints(g, start), variant):
            logger.debug(f"Start {list(start)} is not a {variant.value} prefix on {describe_graph(g)}; skipped")
            continue
        candidate = greedy_min_footprint(g, variant, start)
        if best is None or len(candidate) > len(best):
            best = candidate
    return best


def _search_to_length(g: Graph, variant: Variant, target: int, limit: int) -> Optional[List[int]]:
    """
    Depth-first search for a valid prefix of ``target`` vertices, smallest
    footprint first. A dominated set that failed with some remaining length
    fails with any larger one.
    """
    closed = g.closed_rows()
    reach = list(g.rows) if variant == Variant.ZGRUNDY else closed
    full = g.full_mask
    failed: Dict[int, int] = {}
    nodes = 0

    def search(order: List[int], dominated: int) -> Optional[List[int]]:
        nonlocal nodes
        need = target - len(order)
        if need <= 0:
            return list(order)
        if (full & ~dominated).bit_count() < need or failed.get(dominated, need + 1) <= need:
            return None
        nodes += 1
        if nodes > limit:
            raise _PrefixBudgetExceeded()
        candidates = sorted(
            ((closed[v] & ~dominated).bit_count(), v) for v in range(g.n) if reach[v] & ~dominated
        )
        for _, v in candidates:
            order.append(v)
            found = search(order, dominated | closed[v])
            if found is not None:
                return found
            order.pop()
        failed[dominated] = need
        return None

    try:
        return search([], 0)
    except _PrefixBudgetExceeded:
        logger.warning(f"Length-{target} search on {describe_graph(g)} stopped after {limit} nodes")
        return None


@handle_errors
def constructive_sequence(
    g: Graph,
    variant: Variant = Variant.GRUNDY,
    config: SolverConfig = DEFAULT_SOLVER_CONFIG,
) -> VertexSequence:
    """
    Run the proof-guided constructions and keep the longest sequence.

    Closed variant: the start pair, the pair with each third vertex that
    still reaches beyond both closed neighbourhoods, the reversed pair
    (graphs with triangles), the odd-cycle start (triangle-free,
    non-bipartite graphs) and the empty start, each extended greedily.
    Z variant: additionally the cubic prefix search on connected cubic
    graphs other than ``K_4`` and ``K_{3,3}``.

    On connected regular graphs covered by a lower bound, a result below the
    bound is retried from every single vertex and every ordered edge, and
    then by a bounded search for a prefix of the promised length.

    Returns:
        The longest candidate; ties go to the earlier one in the order above

    Raises:
        BoundError: If no construction reaches the bound within the search budget
    """
    variant = Variant(variant)
    best = _longest(g, variant, _primary_starts(g, variant, config))
    target = _bound_target(g, variant)
    if target is not None and len(best) < target:
        logger.info(
            f"Proof-guided starts give {len(best)} < {target} on {describe_graph(g)}; trying every vertex and edge"
        )
        retry = _longest(g, variant, _fallback_starts(g))
        if retry is not None and len(retry) > len(best):
            best = retry
        if len(best) < target:
            prefix = _search_to_length(g, variant, target, config.prefix_search_node_limit)
            if prefix is not None:
                best = greedy_min_footprint(g, variant, prefix)
        if len(best) < target:
            raise BoundError(
                f"No {variant.value} construction of length {target} found on {describe_graph(g)}"
            )
    logger.debug(f"Constructed {variant.value} sequence of length {len(best)} on {describe_graph(g)}")
    return best


def unit_start(decomposition: FamilyMDecomposition, leaf: int) -> List[int]:
    """
    Start sequence inside the unit at ``leaf``: ``(p2, q2, p1, alpha)`` in an
    X unit, ``(r, p, alpha)`` in a Y unit.

    The first vertex footprints its whole closed neighbourhood; ``p1`` and
    ``alpha`` (X) or ``p`` and ``alpha`` (Y) footprint one vertex each, the
    last of them being the skeleton neighbour of ``alpha``.
    """
    roles = decomposition.roles[leaf]
    if decomposition.units[leaf] == UnitKind.X:
        return [roles["p2"], roles["q2"], roles["p1"], roles["alpha"]]
    return [roles["r"], roles["p"], roles["alpha"]]


@handle_errors
def family_m_witness(decomposition: FamilyMDecomposition) -> VertexSequence:
    """
    A Z-sequence longer than ``n/2`` for a family member outside the seven
    extremal ones.

    Two units whose leaves are at skeleton distance at least three are
    started with :func:`unit_start`, then the inner vertices of the skeleton
    path between them are played, and the sequence is extended greedily.

    Raises:
        FamilyError: If the skeleton has no two leaves at distance three or
            more (the seven extremal members)
    """
    tree = decomposition.skeleton()
    leaves = decomposition.leaves
    distance = dict(nx.all_pairs_shortest_path_length(tree))
    pair = next(
        ((a, b) for i, a in enumerate(leaves) for b in leaves[i + 1:] if distance[a][b] >= 3),
        None,
    )
    if pair is None:
        raise FamilyError("Every pair of skeleton leaves is within distance two; no witness beyond n/2")
    first, second = pair
    path = nx.shortest_path(tree, first, second)
    start = unit_start(decomposition, first) + unit_start(decomposition, second)
    start += [decomposition.skeleton_vertex(node) for node in path[1:-1]]
    return greedy_min_footprint(decomposition.graph, Variant.ZGRUNDY, start)
