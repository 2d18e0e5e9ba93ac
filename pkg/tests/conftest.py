import pytest

from grundylab.families.catalog import M_PRIME_LAYOUTS
from grundylab.families.family_m import assemble_family_m
from grundylab.families.named import (
    make_complete, make_complete_bipartite, make_cube, make_cycle, make_diamond,
    make_necklace_yy, make_petersen, make_prism,
)


@pytest.fixture
def petersen():
    return make_petersen()


@pytest.fixture
def prism():
    return make_prism()


@pytest.fixture
def cube():
    return make_cube()


@pytest.fixture
def k4():
    return make_complete(4)


@pytest.fixture
def k33():
    return make_complete_bipartite(3, 3)


@pytest.fixture
def c5():
    return make_cycle(5)


@pytest.fixture
def diamond():
    return make_diamond()


@pytest.fixture
def n_yy():
    return make_necklace_yy()


@pytest.fixture
def x2():
    skeleton, units = M_PRIME_LAYOUTS["X2"]
    return assemble_family_m(skeleton, units, label="X2")


@pytest.fixture
def y2():
    skeleton, units = M_PRIME_LAYOUTS["Y2"]
    return assemble_family_m(skeleton, units, label="Y2")


@pytest.fixture
def five_x_member():
    """Skeleton a-b-c with two leaves at a, one at b, two at c; five X units."""
    skeleton = [(0, 1), (1, 2), (0, 3), (0, 4), (1, 5), (2, 6), (2, 7)]
    units = {leaf: "X" for leaf in (3, 4, 5, 6, 7)}
    return assemble_family_m(skeleton, units, label="X5")
