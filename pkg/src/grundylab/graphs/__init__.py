"""
Graph core: immutable bit-packed graphs, graph6 interchange, structural
queries and isomorphism.
"""

from grundylab.graphs.graph import (
    Edge, EdgeList, Graph, bits_to_list, build_graph, complement, disjoint_union,
    graph_from_networkx, induced_subgraph, iter_bits, mask_of, relabel,
)
from grundylab.graphs.graph6 import (
    graph6_decode, graph6_encode, read_graph6_file, read_graph6_lines, write_graph6_lines,
)
from grundylab.graphs.isomorphism import (
    find_isomorphism, isomorphic, isomorphism_classes, isomorphism_key,
)
from grundylab.graphs.structure import (
    TwinKind, are_twins, bridges, components, degree_sequence, find_twins, girth, has_diamond,
    has_triangle, has_Y_subgraph, is_bipartite, is_complete, is_connected,
    is_k_regular, regularity, shortest_cycle_through, shortest_odd_cycle,
)
