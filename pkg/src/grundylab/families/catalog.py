"""
Catalog of named graphs with their known invariant values.

Known values are the golden numbers the exact solvers are tested against.
Zero forcing numbers of graphs without isolated vertices follow from the
Z-Grundy value by ``Z = n - zgrundy``.
"""

import enum
import functools
import logging
import re
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from grundylab.families.family_m import assemble_family_m, make_X, make_Y
from grundylab.families.named import (
    make_co_2c4, make_complete, make_complete_bipartite, make_cube, make_cycle,
    make_diamond, make_necklace_xx, make_necklace_xy, make_necklace_yy, make_path,
    make_petersen, make_prism, make_tk, make_twisted_cube,
)
from grundylab.graphs.graph import Graph
from grundylab.utils.error_handler import FamilyError

# Configure logging
logger = logging.getLogger(__name__)


class KnownValues(BaseModel):
    """Invariant values taken as ground truth; ``None`` where no value is recorded."""

    model_config = ConfigDict(frozen=True)

    grundy: Optional[int] = None
    zgrundy: Optional[int] = None
    zero_forcing: Optional[int] = None


class CatalogEntry(BaseModel):
    """A named graph and its known values."""

    model_config = ConfigDict(frozen=True)

    name: str
    graph: Graph
    known_values: Optional[KnownValues] = None


class Characterization(str, enum.Enum):
    """Extremal lists of cubic graphs."""

    ZGRUNDY_HALF = "thm44"
    ZERO_FORCING_HALF = "cor45"
    GRUNDY_HALF = "cor46"
    FAMILY_M_EXTREMAL = "prop42"


# Skeletons of the seven extremal family members
_K2 = [(0, 1)]
_STAR = [(0, 1), (0, 2), (0, 3)]
M_PRIME_LAYOUTS = {
    "X2": (_K2, {0: "X", 1: "X"}),
    "X3": (_STAR, {1: "X", 2: "X", 3: "X"}),
    "Y2": (_K2, {0: "Y", 1: "Y"}),
    "Y3": (_STAR, {1: "Y", 2: "Y", 3: "Y"}),
    "XY": (_K2, {0: "X", 1: "Y"}),
    "XY2": (_STAR, {1: "X", 2: "Y", 3: "Y"}),
    "X2Y": (_STAR, {1: "X", 2: "X", 3: "Y"}),
}
M_PRIME_ZGRUNDY = {"X2": 7, "X3": 11, "Y2": 5, "Y3": 8, "XY": 6, "XY2": 9, "X2Y": 10}

SPORADIC_BUILDERS: Dict[str, Callable[[], Graph]] = {
    "N_XX": make_necklace_xx,
    "N_XY": make_necklace_xy,
    "N_YY": make_necklace_yy,
    "K3xK2": make_prism,
    "TK": make_tk,
    "Q3": make_cube,
    "TQ3": make_twisted_cube,
    "Petersen": make_petersen,
}
SPORADIC_ZGRUNDY = {
    "N_XX": 6, "N_XY": 5, "N_YY": 4, "K3xK2": 3, "TK": 4, "Q3": 4, "TQ3": 4, "Petersen": 5,
}

# Cubic graphs with Grundy domination number exactly n/2
GRUNDY_HALF = ["K33", "Y2", "Y3", "N_YY", "K3xK2", "Q3", "TQ3", "Petersen"]

_PARAMETRIC = [
    (re.compile(r"^C(\d+)$", re.IGNORECASE), lambda m: make_cycle(int(m.group(1)))),
    (re.compile(r"^P(\d+)$", re.IGNORECASE), lambda m: make_path(int(m.group(1)))),
    (re.compile(r"^K(\d+)$", re.IGNORECASE), lambda m: make_complete(int(m.group(1)))),
    (
        re.compile(r"^K(\d+),(\d+)$", re.IGNORECASE),
        lambda m: make_complete_bipartite(int(m.group(1)), int(m.group(2))),
    ),
]


def _known(g: Graph, zgrundy: int, grundy: Optional[int] = None) -> KnownValues:
    return KnownValues(grundy=grundy, zgrundy=zgrundy, zero_forcing=g.n - zgrundy)


def _extremal_entries() -> List[CatalogEntry]:
    entries = []
    for name, (skeleton, units) in M_PRIME_LAYOUTS.items():
        g = assemble_family_m(skeleton, units, label=name).graph
        grundy = g.n // 2 if name in GRUNDY_HALF else None
        entries.append(CatalogEntry(name=name, graph=g, known_values=_known(g, M_PRIME_ZGRUNDY[name], grundy)))
    for name, builder in SPORADIC_BUILDERS.items():
        g = builder().with_label(name)
        grundy = g.n // 2 if name in GRUNDY_HALF else None
        entries.append(CatalogEntry(name=name, graph=g, known_values=_known(g, SPORADIC_ZGRUNDY[name], grundy)))
    return entries


@functools.lru_cache(maxsize=None)
def _catalog_entries() -> Tuple[CatalogEntry, ...]:
    entries = _extremal_entries()
    x_unit, y_unit = make_X().graph, make_Y().graph
    entries.append(CatalogEntry(name="X", graph=x_unit))
    entries.append(CatalogEntry(name="Y", graph=y_unit))

    k33 = make_complete_bipartite(3, 3).with_label("K33")
    entries.append(CatalogEntry(name="K33", graph=k33, known_values=_known(k33, 2, 3)))
    for k in (4, 5):
        kkk = make_complete_bipartite(k, k).with_label(f"K{k}{k}")
        entries.append(CatalogEntry(name=f"K{k}{k}", graph=kkk, known_values=_known(kkk, 2, k)))
    for n in (4, 5):
        complete = make_complete(n)
        entries.append(CatalogEntry(name=f"K{n}", graph=complete, known_values=_known(complete, 1, 1)))
    co_2c4 = make_co_2c4()
    entries.append(CatalogEntry(name="co_2C4", graph=co_2c4, known_values=KnownValues(grundy=2)))
    diamond = make_diamond()
    entries.append(CatalogEntry(name="diamond", graph=diamond, known_values=_known(diamond, 2, 2)))
    for n in (5, 6, 7):
        cycle = make_cycle(n)
        entries.append(CatalogEntry(name=f"C{n}", graph=cycle, known_values=_known(cycle, n - 2, n - 2)))
    return tuple(entries)


def catalog() -> List[CatalogEntry]:
    """
    Every named graph: the fifteen cubic graphs with ``zgrundy = n/2``, the
    units X and Y, the exception graphs of the regular bounds, and a few
    members of the parametric families.
    """
    return list(_catalog_entries())


def _normalize(name: str) -> str:
    return name.strip().replace("_", "").replace("-", "").lower()


def catalog_entry(name: str) -> CatalogEntry:
    """
    Look up an entry by name (case, ``_`` and ``-`` are ignored).

    Raises:
        FamilyError: If no entry has that name
    """
    wanted = _normalize(name)
    for entry in catalog():
        if _normalize(entry.name) == wanted:
            return entry
    raise FamilyError(f"No catalog entry named {name!r}")


def named_graph(name: str) -> Graph:
    """
    A catalog graph, or a parametric one: ``C<n>``, ``P<n>``, ``K<n>``, ``K<a>,<b>``.

    Raises:
        FamilyError: If the name matches neither
    """
    try:
        return catalog_entry(name).graph
    except FamilyError:
        for pattern, builder in _PARAMETRIC:
            match = pattern.match(name.strip())
            if match:
                return builder(match)
        raise


def characterization_members(which: Characterization) -> List[CatalogEntry]:
    """Catalog entries a characterization declares extremal."""
    which = Characterization(which)
    if which == Characterization.GRUNDY_HALF:
        names = GRUNDY_HALF
    elif which == Characterization.FAMILY_M_EXTREMAL:
        names = list(M_PRIME_LAYOUTS)
    else:
        names = list(M_PRIME_LAYOUTS) + list(SPORADIC_BUILDERS)
    by_name = {entry.name: entry for entry in catalog()}
    return [by_name[name] for name in names]
