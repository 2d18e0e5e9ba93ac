"""
Zero forcing propagation.

Colour-change rule: a blue vertex whose only non-blue neighbour is ``w``
forces ``w`` blue. The closure of a seed is the fixed point of the rule and
does not depend on the order in which forces are applied.
"""

import logging
from typing import Iterable, List, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict

from grundylab.graphs.graph import Graph, bits_to_list, iter_bits, mask_of

# Configure logging
logger = logging.getLogger(__name__)

Force = Tuple[int, int]


class ForcingState(BaseModel):
    """
    Result of running the colour-change rule from a seed.

    Attributes:
        blue: Bitmask of blue vertices at the fixed point
        history: ``(forcer, forced)`` pairs in the order they were applied
    """

    model_config = ConfigDict(frozen=True)

    blue: int
    history: Tuple[Force, ...] = ()

    @property
    def blue_vertices(self) -> List[int]:
        return bits_to_list(self.blue)

    def is_complete(self, g: Graph) -> bool:
        return self.blue == g.full_mask


def _seed_mask(seed: Union[int, Iterable[int]]) -> int:
    return seed if isinstance(seed, int) else mask_of(seed)


def forcing_closure(g: Graph, seed: Union[int, Iterable[int]]) -> ForcingState:
    """
    Apply the colour-change rule from ``seed`` until nothing changes.

    One force per round: the lowest-index blue vertex with exactly one
    non-blue neighbour forces it.

    Args:
        g: Graph to propagate on
        seed: Initial blue vertices, as a bitmask or an iterable of vertices

    Returns:
        The fixed point with one valid forcing history
    """
    blue = _seed_mask(seed)
    history: List[Force] = []
    while True:
        for u in iter_bits(blue):
            white = g.rows[u] & ~blue
            if white and not white & (white - 1):
                w = white.bit_length() - 1
                blue |= white
                history.append((u, w))
                break
        else:
            break
    return ForcingState(blue=blue, history=tuple(history))


def closure_mask(rows: Sequence[int], blue: int) -> int:
    """Fixed point of the colour-change rule without recording a history."""
    changed = True
    while changed:
        changed = False
        for u in iter_bits(blue):
            white = rows[u] & ~blue
            if white and not white & (white - 1):
                blue |= white
                changed = True
    return blue


def is_zero_forcing_set(g: Graph, seed: Union[int, Iterable[int]]) -> bool:
    return closure_mask(g.rows, _seed_mask(seed)) == g.full_mask


def check_history(g: Graph, seed: Union[int, Iterable[int]], history: Iterable[Force]) -> bool:
    """Replay a forcing history and check every step against the colour-change rule."""
    blue = _seed_mask(seed)
    for u, w in history:
        if not blue >> u & 1 or g.rows[u] & ~blue != 1 << w:
            return False
        blue |= 1 << w
    return True
