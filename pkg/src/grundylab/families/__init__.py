"""
Graph families: named constructors, the X/Y unit family, the catalog of
known values and the random regular sampler.
"""

from grundylab.families.catalog import (
    CatalogEntry, Characterization, KnownValues, catalog, catalog_entry,
    characterization_members, named_graph,
)
from grundylab.families.family_m import (
    FamilyMDecomposition, UnitGraph, UnitKind, assemble_family_m, make_family_M,
    make_X, make_Y, recognize_family_M,
)
from grundylab.families.named import (
    make_co_2c4, make_complete, make_complete_bipartite, make_cube, make_cycle,
    make_diamond, make_necklace_xx, make_necklace_xy, make_necklace_yy, make_path,
    make_petersen, make_prism, make_tk, make_twisted_cube,
)
from grundylab.families.sampler import random_k_regular
