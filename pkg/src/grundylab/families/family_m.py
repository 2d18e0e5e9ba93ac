"""
The units X and Y and the cubic family built by hanging them on the leaves
of a tree whose vertices all have degree 1 or 3.

X is ``K_{3,3}`` with the edge ``p1 q1`` subdivided by ``alpha``; Y is
``K_{2,3}`` with parts ``{p, q}`` and ``{r, s, t}`` plus the edge ``rs``, and
``alpha = t``. Every leaf of the skeleton tree is identified with the
``alpha`` vertex of its unit.
"""

import enum
import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict

from grundylab.graphs.graph import Edge, Graph, build_graph, iter_bits
from grundylab.graphs.structure import bridges, components, is_connected, is_k_regular
from grundylab.utils.error_handler import FamilyError, handle_errors
from grundylab.utils.log_utils import describe_graph

# Configure logging
logger = logging.getLogger(__name__)

# Roles in unit numbering order; the last role is alpha
X_ROLES = ("p1", "p2", "p3", "q1", "q2", "q3", "alpha")
Y_ROLES = ("p", "q", "r", "s", "alpha")

X_EDGES: List[Edge] = [
    (p, q) for p in range(3) for q in range(3, 6) if (p, q) != (0, 3)
] + [(0, 6), (3, 6)]
Y_EDGES: List[Edge] = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]


class UnitKind(str, enum.Enum):
    """The two pendant units."""

    X = "X"
    Y = "Y"

    @property
    def order(self) -> int:
        return 7 if self == UnitKind.X else 5

    @property
    def roles(self) -> Tuple[str, ...]:
        return X_ROLES if self == UnitKind.X else Y_ROLES

    @property
    def edges(self) -> List[Edge]:
        return X_EDGES if self == UnitKind.X else Y_EDGES


class UnitGraph(BaseModel):
    """A unit together with its designated vertex and named roles."""

    model_config = ConfigDict(frozen=True)

    kind: UnitKind
    graph: Graph
    alpha: int
    roles: Dict[str, int]


class FamilyMDecomposition(BaseModel):
    """
    A member of the family together with how it is put together.

    Attributes:
        graph: The cubic graph
        skeleton_edges: Edges of the skeleton tree over skeleton node ids
        units: Unit kind of every skeleton leaf
        attachment: Skeleton leaf -> the ``alpha`` vertex of its unit in ``graph``
        internal: Internal skeleton node -> its vertex in ``graph``
        roles: Skeleton leaf -> unit role name -> vertex in ``graph``
    """

    model_config = ConfigDict(frozen=True)

    graph: Graph
    skeleton_edges: List[Edge]
    units: Dict[int, UnitKind]
    attachment: Dict[int, int]
    internal: Dict[int, int]
    roles: Dict[int, Dict[str, int]]

    @property
    def skeleton_order(self) -> int:
        return len(self.units) + len(self.internal)

    @property
    def in_M_prime(self) -> bool:
        """The seven extremal members have skeleton ``K_2`` or ``K_{1,3}``."""
        return self.skeleton_order <= 4

    @property
    def leaves(self) -> List[int]:
        return sorted(self.units)

    def skeleton(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(list(self.units) + list(self.internal))
        tree.add_edges_from(self.skeleton_edges)
        return tree

    def skeleton_vertex(self, node: int) -> int:
        """Vertex of ``graph`` that stands for a skeleton node."""
        if node in self.attachment:
            return self.attachment[node]
        return self.internal[node]

    def unit_signature(self) -> str:
        """Unit letters sorted, e.g. ``XXY``."""
        return "".join(sorted(kind.value for kind in self.units.values()))


def _make_unit(kind: UnitKind) -> UnitGraph:
    graph = build_graph(kind.order, kind.edges, label=kind.value)
    roles = {role: i for i, role in enumerate(kind.roles)}
    return UnitGraph(kind=kind, graph=graph, alpha=roles["alpha"], roles=roles)


def make_X() -> UnitGraph:
    """``K_{3,3}`` with one edge subdivided; ``alpha`` is the subdivision vertex."""
    return _make_unit(UnitKind.X)


def make_Y() -> UnitGraph:
    """``K_{2,3}`` plus an edge between two degree-2 vertices; ``alpha`` is the third."""
    return _make_unit(UnitKind.Y)


def _kind_name(kind: Union[UnitKind, str]) -> str:
    return kind.value if isinstance(kind, UnitKind) else str(kind).strip().upper()


def _check_skeleton(tree: nx.Graph) -> None:
    if tree.number_of_nodes() < 2 or not nx.is_tree(tree):
        raise FamilyError("Skeleton must be a tree with at least one edge")
    for node, degree in sorted(tree.degree()):
        if degree not in (1, 3):
            raise FamilyError(f"Skeleton node {node} has degree {degree}; only 1 and 3 are allowed")


@handle_errors
def assemble_family_m(
    skeleton: Sequence[Sequence[int]],
    units: Mapping[int, Union[UnitKind, str]],
    label: Optional[str] = None,
) -> FamilyMDecomposition:
    """
    Build a family member from a skeleton tree and a unit for every leaf.

    Internal skeleton nodes become vertices ``0..I-1`` in increasing node
    order; then each leaf, in increasing order, contributes its unit with the
    vertex numbering of :func:`make_X` / :func:`make_Y`.

    Args:
        skeleton: Edge list of the skeleton tree
        units: Leaf -> ``"X"`` or ``"Y"``
        label: Optional graph label

    Returns:
        The decomposition, whose ``graph`` is the assembled cubic graph

    Raises:
        FamilyError: On a skeleton that is not a {1,3}-tree, an unassigned
            leaf, or a unit assigned to an internal node
    """
    tree = nx.Graph()
    tree.add_edges_from((int(a), int(b)) for a, b in skeleton)
    _check_skeleton(tree)

    leaves = sorted(node for node, degree in tree.degree() if degree == 1)
    inner = sorted(node for node, degree in tree.degree() if degree == 3)
    try:
        kinds = {int(node): UnitKind(_kind_name(kind)) for node, kind in units.items()}
    except ValueError as e:
        raise FamilyError(f"Unknown unit kind: {e}")
    missing = [leaf for leaf in leaves if leaf not in kinds]
    if missing:
        raise FamilyError(f"Skeleton leaves without a unit: {missing}")
    extra = sorted(set(kinds) - set(leaves))
    if extra:
        raise FamilyError(f"Units assigned to nodes that are not leaves: {extra}")

    internal = {node: i for i, node in enumerate(inner)}
    edges: List[Edge] = []
    attachment: Dict[int, int] = {}
    roles: Dict[int, Dict[str, int]] = {}
    offset = len(inner)
    for leaf in leaves:
        kind = kinds[leaf]
        edges.extend((offset + a, offset + b) for a, b in kind.edges)
        roles[leaf] = {role: offset + i for i, role in enumerate(kind.roles)}
        attachment[leaf] = roles[leaf]["alpha"]
        offset += kind.order

    position = {**internal, **attachment}
    edges.extend((position[a], position[b]) for a, b in tree.edges())
    graph = build_graph(offset, edges, label=label)
    logger.debug(f"Assembled family member {describe_graph(graph)} from {len(leaves)} units")
    return FamilyMDecomposition(
        graph=graph,
        skeleton_edges=sorted((min(a, b), max(a, b)) for a, b in tree.edges()),
        units={leaf: kinds[leaf] for leaf in leaves},
        attachment=attachment,
        internal=internal,
        roles=roles,
    )


def make_family_M(
    skeleton: Sequence[Sequence[int]],
    units: Mapping[int, Union[UnitKind, str]],
    label: Optional[str] = None,
) -> Graph:
    return assemble_family_m(skeleton, units, label=label).graph


def _match_X(g: Graph, vertices: int, alpha: int) -> Optional[Dict[str, int]]:
    """Fixed pattern match of X on the 7 vertices in ``vertices`` with the given alpha."""
    inside = [w for w in iter_bits(g.rows[alpha] & vertices)]
    if len(inside) != 2:
        return None
    p1, q1 = inside
    if g.has_edge(p1, q1):
        return None
    rest = vertices & ~((1 << alpha) | (1 << p1) | (1 << q1))
    q_side = g.rows[p1] & rest
    p_side = g.rows[q1] & rest
    if q_side.bit_count() != 2 or p_side.bit_count() != 2 or q_side & p_side:
        return None
    if q_side | p_side != rest:
        return None
    for p in iter_bits(p_side):
        if g.rows[p] & vertices != q_side | (1 << q1):
            return None
    for q in iter_bits(q_side):
        if g.rows[q] & vertices != p_side | (1 << p1):
            return None
    p2, p3 = iter_bits(p_side)
    q2, q3 = iter_bits(q_side)
    return {"p1": p1, "p2": p2, "p3": p3, "q1": q1, "q2": q2, "q3": q3, "alpha": alpha}


def _match_Y(g: Graph, vertices: int, alpha: int) -> Optional[Dict[str, int]]:
    """Fixed pattern match of Y on the 5 vertices in ``vertices`` with the given alpha."""
    inside = [w for w in iter_bits(g.rows[alpha] & vertices)]
    if len(inside) != 2:
        return None
    p, q = inside
    if g.has_edge(p, q):
        return None
    rest = vertices & ~((1 << alpha) | (1 << p) | (1 << q))
    r, s = iter_bits(rest)
    if not g.has_edge(r, s):
        return None
    for v in (r, s):
        if not (g.has_edge(v, p) and g.has_edge(v, q)):
            return None
    return {"p": p, "q": q, "r": r, "s": s, "alpha": alpha}


@handle_errors
def recognize_family_M(g: Graph) -> Optional[FamilyMDecomposition]:
    """
    Decide whether a connected cubic graph belongs to the family, and if so
    recover its skeleton and units.

    The bridges of a member are exactly the skeleton edges; removing them
    leaves single internal vertices (three bridges each) and the units (one
    bridge each, attached at ``alpha``).

    Returns:
        The decomposition with skeleton nodes numbered by their vertex in
        ``g``, or ``None`` when ``g`` is not a member

    Raises:
        FamilyError: If ``g`` is not cubic
    """
    if not is_k_regular(g, 3):
        raise FamilyError(f"Recognition needs a cubic graph, got {describe_graph(g)}")

    if not is_connected(g):
        return None
    cut_edges = bridges(g)
    if not cut_edges:
        return None
    cut_rows = [0] * g.n
    for u, v in cut_edges:
        cut_rows[u] |= 1 << v
        cut_rows[v] |= 1 << u
    remainder = Graph(n=g.n, rows=tuple(row & ~cut for row, cut in zip(g.rows, cut_rows)))

    units: Dict[int, UnitKind] = {}
    roles: Dict[int, Dict[str, int]] = {}
    internal_vertices: List[int] = []
    for part in components(remainder):
        members = list(iter_bits(part))
        ends = [v for v in members if cut_rows[v]]
        bridge_count = sum(cut_rows[v].bit_count() for v in ends)
        if len(members) == 1 and bridge_count == 3:
            internal_vertices.append(members[0])
            continue
        if bridge_count != 1:
            return None
        alpha = ends[0]
        if len(members) == 7:
            matched = _match_X(g, part, alpha)
            kind = UnitKind.X
        elif len(members) == 5:
            matched = _match_Y(g, part, alpha)
            kind = UnitKind.Y
        else:
            matched = None
        if matched is None:
            return None
        units[alpha] = kind
        roles[alpha] = matched

    if len(units) < 2:
        return None
    decomposition = FamilyMDecomposition(
        graph=g,
        skeleton_edges=list(cut_edges),
        units=units,
        attachment={alpha: alpha for alpha in units},
        internal={v: v for v in internal_vertices},
        roles=roles,
    )
    logger.debug(
        f"Recognized {describe_graph(g)}: skeleton order {decomposition.skeleton_order}, "
        f"units {decomposition.unit_signature()}"
    )
    return decomposition
