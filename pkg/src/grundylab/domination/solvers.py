"""
Exact solvers for the Grundy domination number, the Z-Grundy domination
number and the zero forcing number.

The Grundy solvers search over dominated sets: which vertices may be played
next, and what they footprint, depends only on the set ``D`` of vertices
dominated so far, so the best continuation is memoized per ``D``.
"""

import logging
import time
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from grundylab.domination.forcing import closure_mask, forcing_closure
from grundylab.domination.heuristics import greedy_min_footprint
from grundylab.domination.sequences import Variant, VertexSequence, footprints, validate_witness
from grundylab.graphs.graph import Graph, bits_to_list, induced_subgraph, mask_of
from grundylab.utils.config import DEFAULT_SOLVER_CONFIG, SolverConfig
from grundylab.utils.error_handler import SolverError, SolverInconsistencyError, handle_errors
from grundylab.utils.log_utils import describe_graph

# Configure logging
logger = logging.getLogger(__name__)


class SolveStats(BaseModel):
    """Bookkeeping of one solve."""

    model_config = ConfigDict(frozen=True)

    method: str
    explored_states: int = 0
    elapsed: float = 0.0
    cross_checked: bool = False


class SolveResult(BaseModel):
    """
    Value of an invariant together with a certificate.

    Attributes:
        invariant: ``grundy``, ``zgrundy`` or ``zero_forcing``
        value: The exact value
        sequence: Maximum sequence (Grundy variants)
        seed: Minimum zero forcing set (zero forcing)
        stats: How the value was obtained
    """

    model_config = ConfigDict(frozen=True)

    invariant: str
    value: int
    sequence: Optional[VertexSequence] = None
    seed: Optional[Tuple[int, ...]] = None
    stats: SolveStats

    @property
    def witness(self):
        return self.sequence if self.sequence is not None else self.seed


class _MemoBudgetExceeded(Exception):
    pass


def _playable(rows: List[int], closed: List[int], dominated: int, variant: Variant) -> List[int]:
    if variant == Variant.ZGRUNDY:
        return [v for v in range(len(rows)) if rows[v] & ~dominated]
    return [v for v in range(len(rows)) if closed[v] & ~dominated]


def _check_input(g: Graph, variant: Variant) -> None:
    if g.n == 0:
        raise SolverError("Solvers need a graph with at least one vertex")
    if variant == Variant.ZGRUNDY and g.isolated_vertices():
        raise SolverError(
            f"Z-Grundy domination is undefined with isolated vertices {g.isolated_vertices()} "
            f"in {describe_graph(g)}"
        )


def _memo_search(g: Graph, variant: Variant, limit: int) -> Tuple[List[int], int]:
    """Depth-first search with a memo ``D -> longest continuation``; returns (order, states)."""
    rows = list(g.rows)
    closed = g.closed_rows()
    memo: Dict[int, int] = {}

    def best(dominated: int) -> int:
        cached = memo.get(dominated)
        if cached is not None:
            return cached
        value = 0
        seen = set()
        for v in _playable(rows, closed, dominated, variant):
            after = dominated | closed[v]
            if after in seen:
                continue
            seen.add(after)
            value = max(value, 1 + best(after))
        memo[dominated] = value
        if len(memo) > limit:
            raise _MemoBudgetExceeded()
        return value

    best(0)
    # Rebuild a witness, lowest index first among optimal moves
    order: List[int] = []
    dominated = 0
    remaining = memo[0]
    while remaining:
        for v in _playable(rows, closed, dominated, variant):
            after = dominated | closed[v]
            if memo.get(after) == remaining - 1:
                order.append(v)
                dominated = after
                remaining -= 1
                break
    return order, len(memo)


def _branch_and_bound(g: Graph, variant: Variant, incumbent: List[int], limit: int) -> Tuple[List[int], int]:
    """
    Depth-first branch-and-bound; every step footprints at least one new
    vertex, so the undominated count bounds the remaining length.
    """
    rows = list(g.rows)
    closed = g.closed_rows()
    full = g.full_mask
    best_order = list(incumbent)
    # Deepest depth at which a dominated set was reached; bounded like the memo
    reached: Dict[int, int] = {}
    explored = 0
    path: List[int] = []

    def dive(dominated: int) -> None:
        nonlocal best_order, explored
        explored += 1
        depth = len(path)
        if depth > len(best_order):
            best_order = list(path)
        if depth + (full & ~dominated).bit_count() <= len(best_order):
            return
        previous = reached.get(dominated)
        if previous is not None and previous >= depth:
            return
        if previous is not None or len(reached) < limit:
            reached[dominated] = depth
        for v in _playable(rows, closed, dominated, variant):
            path.append(v)
            dive(dominated | closed[v])
            path.pop()

    dive(0)
    return best_order, explored


@handle_errors
def grundy_number(
    g: Graph,
    variant: Variant = Variant.GRUNDY,
    config: SolverConfig = DEFAULT_SOLVER_CONFIG,
) -> SolveResult:
    """
    Exact Grundy domination number (``variant=GRUNDY``) or Z-Grundy
    domination number (``variant=ZGRUNDY``).

    Args:
        g: Non-empty graph; no isolated vertices for the Z variant
        variant: Which sequences to maximize
        config: Memo budget; above it the search degrades to branch-and-bound

    Returns:
        The value with a maximum sequence as witness

    Raises:
        SolverError: On an empty graph, or isolated vertices with the Z variant
    """
    variant = Variant(variant)
    _check_input(g, variant)
    started = time.perf_counter()
    try:
        order, states = _memo_search(g, variant, config.memo_state_limit)
        method = "memo"
    except _MemoBudgetExceeded:
        logger.warning(
            f"Memo budget of {config.memo_state_limit} states exceeded on {describe_graph(g)}; "
            f"falling back to branch-and-bound"
        )
        incumbent = list(greedy_min_footprint(g, variant).order)
        order, states = _branch_and_bound(g, variant, incumbent, config.memo_state_limit)
        method = "branch-and-bound"
    sequence = footprints(g, order)
    validate_witness(sequence, variant)
    elapsed = time.perf_counter() - started
    logger.debug(f"{variant.value} of {describe_graph(g)} = {len(order)} ({method}, {states} states, {elapsed:.3f}s)")
    return SolveResult(
        invariant=variant.value,
        value=len(order),
        sequence=sequence,
        stats=SolveStats(method=method, explored_states=states, elapsed=elapsed),
    )


@handle_errors
def brute_force_grundy(
    g: Graph,
    variant: Variant = Variant.GRUNDY,
    config: SolverConfig = DEFAULT_SOLVER_CONFIG,
) -> int:
    """
    Maximum sequence length by enumerating every valid sequence.

    No memo and no pruning beyond validity; an independent check of
    :func:`grundy_number` on small graphs.

    Raises:
        SolverError: Above ``config.brute_force_max_order`` vertices, on an
            empty graph, or on isolated vertices with the Z variant
    """
    variant = Variant(variant)
    _check_input(g, variant)
    if g.n > config.brute_force_max_order:
        raise SolverError(f"Brute force is limited to {config.brute_force_max_order} vertices, got {g.n}")
    rows = list(g.rows)
    closed = g.closed_rows()

    def longest(dominated: int, played: int) -> int:
        value = 0
        for v in range(g.n):
            if played >> v & 1:
                continue
            if variant == Variant.ZGRUNDY:
                valid = rows[v] & ~dominated
            else:
                valid = closed[v] & ~dominated
            if valid:
                value = max(value, 1 + longest(dominated | closed[v], played | (1 << v)))
        return value

    return longest(0, 0)


def _direct_zero_forcing(g: Graph) -> Tuple[int, int, int]:
    """Smallest seed by increasing size; returns (size, seed mask, seeds tried)."""
    full = g.full_mask
    rows = g.rows
    tried = 0
    for size in range(g.n + 1):
        for seed in combinations(range(g.n), size):
            tried += 1
            mask = mask_of(seed)
            if closure_mask(rows, mask) == full:
                return size, mask, tried
    return g.n, full, tried


@handle_errors
def zero_forcing_number(g: Graph, config: SolverConfig = DEFAULT_SOLVER_CONFIG) -> SolveResult:
    """
    Exact zero forcing number, computed by duality and cross-checked by a
    direct seed search.

    Isolated vertices cannot be forced and go into every seed; the rest of
    the graph is solved on its own. Duality gives ``n - zgrundy`` with the
    complement of a maximum Z-sequence as seed; the direct search tries seeds
    by increasing size and runs up to ``config.direct_forcing_max_order``
    vertices.

    Raises:
        SolverError: On an empty graph
        SolverInconsistencyError: If the two computations disagree or the
            duality seed does not force the graph
    """
    if g.n == 0:
        raise SolverError("Solvers need a graph with at least one vertex")
    started = time.perf_counter()

    isolated = g.isolated_vertices()
    if isolated:
        rest = [v for v in range(g.n) if v not in set(isolated)]
        seed = list(isolated)
        value = len(isolated)
        cross_checked = True
        explored = 0
        if rest:
            sub, keep = induced_subgraph(g, rest)
            inner = zero_forcing_number(sub, config)
            seed += [keep[v] for v in inner.seed]
            value += inner.value
            cross_checked = inner.stats.cross_checked
            explored = inner.stats.explored_states
        return SolveResult(
            invariant="zero_forcing",
            value=value,
            seed=tuple(sorted(seed)),
            stats=SolveStats(
                method="duality", explored_states=explored,
                elapsed=time.perf_counter() - started, cross_checked=cross_checked,
            ),
        )

    dual = grundy_number(g, Variant.ZGRUNDY, config)
    value = g.n - dual.value
    seed_mask = g.full_mask & ~mask_of(dual.sequence.order)
    if not forcing_closure(g, seed_mask).is_complete(g):
        raise SolverInconsistencyError(
            f"Complement of a maximum Z-sequence does not force {describe_graph(g)}",
            details=f"sequence {list(dual.sequence.order)}",
        )

    cross_checked = False
    explored = dual.stats.explored_states
    if g.n <= config.direct_forcing_max_order:
        direct_value, _, tried = _direct_zero_forcing(g)
        explored += tried
        if direct_value != value:
            raise SolverInconsistencyError(
                f"Zero forcing number of {describe_graph(g)}: duality gives {value}, direct search gives {direct_value}"
            )
        cross_checked = True
    else:
        logger.info(
            f"Direct zero forcing search skipped on {describe_graph(g)} "
            f"(order above {config.direct_forcing_max_order}); duality value only"
        )

    return SolveResult(
        invariant="zero_forcing",
        value=value,
        seed=tuple(bits_to_list(seed_mask)),
        stats=SolveStats(
            method="duality", explored_states=explored,
            elapsed=time.perf_counter() - started, cross_checked=cross_checked,
        ),
    )
