from fractions import Fraction

import pytest

from grundylab.domination.bounds import (
    BoundKind, BoundSpec, grundy_bound_spec, grundy_regular_lower_bound,
    zero_forcing_bound_spec, zero_forcing_regular_upper_bound, zgrundy_bound_spec,
    zgrundy_regular_lower_bound,
)
from grundylab.utils.error_handler import BoundError


class TestGrundyBound:
    @pytest.mark.parametrize(
        "n, k, expected",
        [(10, 3, Fraction(5)), (12, 4, Fraction(4)), (8, 5, Fraction(9, 4))],
    )
    def test_values(self, n, k, expected):
        assert grundy_regular_lower_bound(n, k) == expected

    def test_ceiling_and_floor(self):
        spec = grundy_bound_spec(8, 5)
        assert spec.ceiling == 3
        assert spec.floor == 2
        assert spec.kind == BoundKind.GRUNDY_LOWER

    def test_cubic_bound_is_half(self):
        for n in (4, 6, 8, 10, 12):
            assert grundy_regular_lower_bound(n, 3) == Fraction(n, 2)

    def test_degree_below_three(self):
        with pytest.raises(BoundError):
            grundy_regular_lower_bound(10, 2)

    def test_order_below_k_plus_one(self):
        with pytest.raises(BoundError):
            grundy_regular_lower_bound(4, 4)


class TestZGrundyBound:
    def test_prism(self):
        spec = zgrundy_bound_spec(6, 3, True)
        assert spec.value == Fraction(5, 2)
        assert spec.ceiling == 3

    @pytest.mark.parametrize("k", [3, 4, 5, 6])
    def test_complete_bipartite(self, k):
        assert zgrundy_regular_lower_bound(2 * k, k, False) == 2

    def test_triangle_free_cubic(self):
        assert zgrundy_regular_lower_bound(10, 3, False) == 4

    def test_slack(self):
        spec = zgrundy_bound_spec(6, 3, True)
        assert spec.slack(3) == Fraction(1, 2)
        assert spec.slack(2) == Fraction(-1, 2)


class TestZeroForcingBound:
    @pytest.mark.parametrize(
        "n, k, triangle, expected",
        [(6, 3, False, Fraction(4)), (6, 3, True, Fraction(7, 2)), (10, 3, False, Fraction(6))],
    )
    def test_values(self, n, k, triangle, expected):
        assert zero_forcing_regular_upper_bound(n, k, triangle) == expected

    def test_upper_slack(self):
        spec = zero_forcing_bound_spec(6, 3, False)
        assert not spec.is_lower
        assert spec.slack(4) == 0
        assert spec.slack(5) == -1


class TestBoundSpec:
    def test_denominator_must_be_k_minus_one(self):
        with pytest.raises(BoundError):
            BoundSpec(kind=BoundKind.GRUNDY_LOWER, n=10, k=3, numerator=10, denominator=3)

    def test_duality_links_the_two_triangle_bounds(self):
        for n, k in [(6, 3), (10, 3), (12, 4), (20, 5)]:
            for triangle in (True, False):
                lower = zgrundy_regular_lower_bound(n, k, triangle)
                upper = zero_forcing_regular_upper_bound(n, k, triangle)
                assert lower + upper == n
