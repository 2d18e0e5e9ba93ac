"""
Closed neighbourhood sequences, Z-sequences and footprints.

A step ``v_i`` footprints ``F_i = N[v_i] minus (N[v_1] u ... u N[v_{i-1}])``.
A closed neighbourhood (Grundy) sequence needs every ``F_i`` non-empty; a
Z-sequence needs every ``F_i`` to contain a vertex other than ``v_i``.
"""

import enum
import logging
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from grundylab.graphs.graph import Graph, bits_to_list
from grundylab.graphs.graph6 import graph6_decode, graph6_encode
from grundylab.utils.error_handler import SequenceError, handle_errors

# Configure logging
logger = logging.getLogger(__name__)


class Variant(str, enum.Enum):
    """Sequence variants."""

    GRUNDY = "grundy"
    ZGRUNDY = "zgrundy"


class VertexSequence(BaseModel):
    """
    An ordered vertex list together with its footprints.

    Attributes:
        graph: The graph the sequence lives in
        order: Distinct vertices ``(v_1, ..., v_t)``
        footprints: ``F_i`` as bitmasks, one per step
    """

    model_config = ConfigDict(frozen=True)

    graph: Graph
    order: Tuple[int, ...]
    footprints: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)

    @property
    def dominated(self) -> int:
        """Bitmask of every vertex dominated by the sequence."""
        mask = 0
        for footprint in self.footprints:
            mask |= footprint
        return mask

    def footprint_sets(self) -> List[List[int]]:
        return [bits_to_list(footprint) for footprint in self.footprints]

    def footprint_sizes(self) -> List[int]:
        return [footprint.bit_count() for footprint in self.footprints]


class WitnessRecord(BaseModel):
    """JSON form of a sequence certificate."""

    graph: str
    order: List[int]
    variant: Variant


def _check_order(g: Graph, order: Sequence[int]) -> None:
    seen = 0
    for v in order:
        if not 0 <= v < g.n:
            raise SequenceError(f"Vertex {v} outside 0..{g.n - 1}")
        if seen >> v & 1:
            raise SequenceError(f"Vertex {v} appears twice in the sequence")
        seen |= 1 << v


def _require_no_isolated(g: Graph) -> None:
    isolated = g.isolated_vertices()
    if isolated:
        raise SequenceError(f"Z-sequences need a graph without isolated vertices; isolated: {isolated}")


@handle_errors
def footprints(g: Graph, order: Sequence[int]) -> VertexSequence:
    """
    Compute the footprint of every step of ``order``.

    No validity judgement is made: empty footprints are kept as they are.

    Raises:
        SequenceError: On a repeated vertex or a vertex out of range
    """
    _check_order(g, order)
    dominated = 0
    steps = []
    for v in order:
        closed = g.rows[v] | (1 << v)
        steps.append(closed & ~dominated)
        dominated |= closed
    return VertexSequence(graph=g, order=tuple(order), footprints=tuple(steps))


def is_closed_neighborhood_sequence(g: Graph, order: Sequence[int]) -> bool:
    return all(footprints(g, order).footprints)


def is_z_sequence(g: Graph, order: Sequence[int]) -> bool:
    """Every step footprints a vertex distinct from itself (checked at every index)."""
    _require_no_isolated(g)
    seq = footprints(g, order)
    return all(footprint & ~(1 << v) for v, footprint in zip(seq.order, seq.footprints))


def is_dominating(g: Graph, order: Sequence[int]) -> bool:
    return footprints(g, order).dominated == g.full_mask


def is_valid(seq: VertexSequence, variant: Variant) -> bool:
    if variant == Variant.ZGRUNDY:
        return all(f & ~(1 << v) for v, f in zip(seq.order, seq.footprints))
    return all(seq.footprints)


def single_footprint_count(seq: VertexSequence) -> int:
    """Number of steps that footprint exactly one vertex."""
    return sum(1 for footprint in seq.footprints if footprint.bit_count() == 1)


def dominated_set(seq: VertexSequence) -> int:
    return seq.dominated


@handle_errors
def validate_witness(seq: VertexSequence, variant: Variant, dominating: bool = True) -> None:
    """
    Recompute the footprints of a stored sequence and check it.

    Raises:
        SequenceError: If stored footprints differ from the recomputed ones, a
            step is invalid for ``variant``, or the sequence is required to be
            dominating and is not
    """
    fresh = footprints(seq.graph, seq.order)
    if fresh.footprints != seq.footprints:
        raise SequenceError("Stored footprints do not match the graph", details=str(seq.order))
    if variant == Variant.ZGRUNDY:
        _require_no_isolated(seq.graph)
    if not is_valid(fresh, variant):
        raise SequenceError(f"Sequence {list(seq.order)} is not a valid {variant.value} sequence")
    if dominating and fresh.dominated != seq.graph.full_mask:
        raise SequenceError(f"Sequence {list(seq.order)} is not dominating")


def witness_to_json(seq: VertexSequence, variant: Variant) -> str:
    record = WitnessRecord(graph=graph6_encode(seq.graph), order=list(seq.order), variant=variant)
    return record.model_dump_json()


@handle_errors
def witness_from_json(text: str) -> Tuple[VertexSequence, Variant]:
    """Parse a witness record and re-validate it against its graph."""
    record = WitnessRecord.model_validate_json(text)
    seq = footprints(graph6_decode(record.graph), record.order)
    validate_witness(seq, record.variant)
    return seq, record.variant
