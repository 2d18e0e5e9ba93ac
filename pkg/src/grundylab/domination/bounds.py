"""
Closed-form bounds for regular graphs, evaluated in exact rational
arithmetic.
"""

import enum
import logging
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator

from grundylab.utils.error_handler import BoundError

# Configure logging
logger = logging.getLogger(__name__)


class BoundKind(str, enum.Enum):
    """Which bound a :class:`BoundSpec` evaluates."""

    GRUNDY_LOWER = "grundy_lower"
    ZGRUNDY_LOWER = "zgrundy_lower"
    ZERO_FORCING_UPPER = "zero_forcing_upper"


class BoundSpec(BaseModel):
    """
    An evaluated bound ``numerator / denominator`` with ``denominator = k - 1``.

    Attributes:
        kind: Which formula was evaluated
        n: Order of the graph
        k: Common degree
        has_triangle: Triangle flag (``None`` for the Grundy bound, which ignores it)
        numerator: Numerator of the formula
        denominator: ``k - 1``
    """

    model_config = ConfigDict(frozen=True)

    kind: BoundKind
    n: int
    k: int
    has_triangle: Optional[bool] = None
    numerator: int
    denominator: int

    @model_validator(mode="after")
    def _check_denominator(self) -> "BoundSpec":
        if self.denominator != self.k - 1 or self.denominator <= 0:
            raise BoundError(f"Bound denominator must be k - 1 > 0, got {self.denominator} for k={self.k}")
        return self

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def ceiling(self) -> int:
        return -(-self.numerator // self.denominator)

    @property
    def floor(self) -> int:
        return self.numerator // self.denominator

    @property
    def is_lower(self) -> bool:
        return self.kind != BoundKind.ZERO_FORCING_UPPER

    def slack(self, observed: int) -> Fraction:
        """Distance of ``observed`` from the bound on its feasible side (negative = violated)."""
        if self.is_lower:
            return observed - self.value
        return self.value - observed


def _require_degree(k: int) -> None:
    if k < 3:
        raise BoundError(f"Regular-graph bounds need k >= 3, got k={k}")


def grundy_bound_spec(n: int, k: int) -> BoundSpec:
    _require_degree(k)
    if n < k + 1:
        raise BoundError(f"A {k}-regular graph needs at least {k + 1} vertices, got n={n}")
    return BoundSpec(
        kind=BoundKind.GRUNDY_LOWER, n=n, k=k,
        numerator=n + (k + 1) // 2 - 2, denominator=k - 1,
    )


def zgrundy_bound_spec(n: int, k: int, has_triangle: bool) -> BoundSpec:
    _require_degree(k)
    return BoundSpec(
        kind=BoundKind.ZGRUNDY_LOWER, n=n, k=k, has_triangle=has_triangle,
        numerator=n - 1 if has_triangle else n - 2, denominator=k - 1,
    )


def zero_forcing_bound_spec(n: int, k: int, has_triangle: bool) -> BoundSpec:
    _require_degree(k)
    numerator = n * (k - 2) + (1 if has_triangle else 2)
    return BoundSpec(
        kind=BoundKind.ZERO_FORCING_UPPER, n=n, k=k, has_triangle=has_triangle,
        numerator=numerator, denominator=k - 1,
    )


def grundy_regular_lower_bound(n: int, k: int) -> Fraction:
    """
    Lower bound ``(n + ceil(k/2) - 2) / (k - 1)`` on the Grundy domination
    number of a connected k-regular graph other than ``K_{k+1}`` and the
    complement of two disjoint 4-cycles.

    Raises:
        BoundError: If ``k < 3`` or ``n < k + 1``
    """
    return grundy_bound_spec(n, k).value


def zgrundy_regular_lower_bound(n: int, k: int, has_triangle: bool) -> Fraction:
    """``(n - 1)/(k - 1)`` with a triangle, ``(n - 2)/(k - 1)`` without."""
    return zgrundy_bound_spec(n, k, has_triangle).value


def zero_forcing_regular_upper_bound(n: int, k: int, has_triangle: bool) -> Fraction:
    return zero_forcing_bound_spec(n, k, has_triangle).value
