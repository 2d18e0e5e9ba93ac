import math
import random

import networkx as nx
import pytest

from grundylab.families.named import (
    make_complete, make_complete_bipartite, make_cube, make_cycle, make_necklace_yy,
    make_path, make_petersen, make_prism, make_twisted_cube,
)
from grundylab.graphs import (
    TwinKind, bridges, build_graph, complement, components, degree_sequence,
    disjoint_union, find_isomorphism, find_twins, girth, graph6_decode, graph6_encode,
    graph_from_networkx, has_diamond, has_triangle, has_Y_subgraph, induced_subgraph,
    is_bipartite, is_connected, is_k_regular, isomorphic, isomorphism_classes, read_graph6_file,
    read_graph6_lines, regularity, relabel, shortest_cycle_through, shortest_odd_cycle,
)
from grundylab.utils.error_handler import Graph6Error, GraphError


def _nx_graph6(g):
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


class TestBuildGraph:
    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g.n == 3
        assert g.edge_count == 3
        assert is_k_regular(g, 2)

    def test_diamond_degrees(self):
        g = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
        assert g.degrees() == [2, 3, 3, 2]

    def test_duplicate_edges_collapse(self):
        g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edges() == [(0, 1)]

    def test_loop_rejected(self):
        with pytest.raises(GraphError):
            build_graph(2, [(0, 0)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(GraphError):
            build_graph(2, [(0, 2)])

    def test_asymmetric_rows_rejected(self):
        from grundylab.graphs import Graph

        with pytest.raises(GraphError):
            Graph(n=2, rows=(0b10, 0))

    def test_networkx_round_trip(self, petersen):
        back = graph_from_networkx(petersen.to_networkx())
        assert back.rows == petersen.rows
        assert back.label == "Petersen"


class TestGraph6:
    def test_decode_k4(self):
        g = graph6_decode("C~")
        assert g.n == 4
        assert g.edge_count == 6

    def test_decode_empty_five(self):
        g = graph6_decode("D??")
        assert g.n == 5
        assert g.edge_count == 0

    def test_encode_k4(self):
        assert graph6_encode(make_complete(4)) == "C~"

    def test_encode_single_vertex(self):
        assert graph6_encode(build_graph(1, [])) == "@"

    @pytest.mark.parametrize(
        "builder", [make_petersen, make_prism, make_cube, make_twisted_cube, make_necklace_yy],
    )
    def test_encode_matches_networkx(self, builder):
        g = builder()
        assert graph6_encode(g) == _nx_graph6(g)

    def test_four_byte_header(self):
        g = make_cycle(70)
        text = graph6_encode(g)
        assert text.startswith("~")
        assert text == _nx_graph6(g)
        assert graph6_decode(text).rows == g.rows

    def test_header_prefix_ignored(self):
        assert graph6_decode(">>graph6<<C~").edge_count == 6

    def test_bad_length(self):
        with pytest.raises(Graph6Error):
            graph6_decode("C")

    def test_bad_character(self):
        with pytest.raises(Graph6Error):
            graph6_decode("C!")

    def test_nonzero_padding(self):
        # n=3 has three pair bits; the last three bits of the byte are padding
        with pytest.raises(Graph6Error):
            graph6_decode("B" + chr(63 + 0b111111))

    def test_read_lines_skips_comments(self):
        graphs = list(read_graph6_lines(["# cubic\n", "\n", "C~\n", "D??\n"]))
        assert [g.n for g in graphs] == [4, 5]

    def test_read_lines_reports_line_number(self):
        with pytest.raises(Graph6Error, match="Line 2"):
            list(read_graph6_lines(["C~", "C!"]))

    def test_non_ascii_text(self):
        with pytest.raises(Graph6Error):
            graph6_decode("Cé")

    def test_non_ascii_bytes(self):
        with pytest.raises(Graph6Error):
            graph6_decode(b"C\xc3\xa9")

    def test_read_file_with_non_ascii_bytes(self, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_bytes(b"C~\nC\xc3\xa9\n")
        with pytest.raises(Graph6Error, match="Line 2"):
            read_graph6_file(path)

    def test_read_file(self, tmp_path, petersen):
        path = tmp_path / "petersen.g6"
        path.write_text("# one graph\n" + graph6_encode(petersen) + "\n")
        assert read_graph6_file(path)[0].rows == petersen.rows


class TestStructure:
    def test_petersen(self, petersen):
        assert is_connected(petersen)
        assert is_k_regular(petersen, 3)
        assert regularity(petersen) == 3
        assert girth(petersen) == 5

    def test_cube_girth(self, cube):
        assert girth(cube) == 4

    def test_path_girth_infinite(self):
        assert girth(make_path(3)) == math.inf

    def test_components(self):
        g = disjoint_union(make_cycle(3), make_cycle(4))
        assert components(g) == [0b0000111, 0b1111000]
        assert not is_connected(g)

    def test_degree_sequence(self):
        g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        assert degree_sequence(g) == [3, 1, 1, 1]

    def test_twins_c5(self, c5):
        assert find_twins(c5) == []

    def test_twins_k33(self, k33):
        twins = find_twins(k33)
        assert len(twins) == 6
        assert {kind for _, _, kind in twins} == {TwinKind.OPEN}

    def test_closed_twins(self, n_yy):
        assert (0, 3, TwinKind.CLOSED) in find_twins(n_yy)

    def test_bridges_x2(self, x2):
        found = bridges(x2.graph)
        assert len(found) == 1
        assert found == sorted(tuple(sorted(e)) for e in nx.bridges(x2.graph.to_networkx()))

    def test_bridges_cycle(self):
        assert bridges(make_cycle(6)) == []

    def test_bridges_path(self):
        assert bridges(make_path(4)) == [(0, 1), (1, 2), (2, 3)]

    def test_subgraphs_n_yy(self, n_yy):
        assert has_triangle(n_yy)
        assert has_diamond(n_yy)
        # k and n are the only pair with two common neighbours, and those
        # neighbours meet nowhere else
        assert not has_Y_subgraph(n_yy)

    def test_subgraphs_petersen(self, petersen):
        assert not has_triangle(petersen)
        assert not has_diamond(petersen)
        assert not has_Y_subgraph(petersen)

    def test_subgraphs_prism(self, prism):
        assert has_triangle(prism)
        assert not has_diamond(prism)
        assert not has_Y_subgraph(prism)

    def test_y_subgraph_in_y_unit(self):
        from grundylab.families.family_m import make_Y

        assert has_Y_subgraph(make_Y().graph)

    def test_bipartite(self, cube, petersen):
        assert is_bipartite(cube)
        assert not is_bipartite(petersen)
        assert not is_bipartite(make_twisted_cube())

    def test_shortest_odd_cycle(self, petersen, cube):
        cycle = shortest_odd_cycle(petersen)
        assert len(cycle) == 5
        assert all(petersen.has_edge(cycle[i], cycle[(i + 1) % 5]) for i in range(5))
        assert shortest_odd_cycle(cube) is None

    def test_shortest_cycle_through(self, cube):
        cycle = shortest_cycle_through(cube, 0)
        assert cycle[0] == 0
        assert len(cycle) == 4
        assert all(cube.has_edge(cycle[i], cycle[(i + 1) % 4]) for i in range(4))
        assert shortest_cycle_through(make_path(4), 1) is None

    def test_induced_subgraph(self, petersen):
        sub, keep = induced_subgraph(petersen, [0, 1, 2, 3, 4])
        assert keep == [0, 1, 2, 3, 4]
        assert isomorphic(sub, make_cycle(5))

    def test_complement_of_two_squares(self):
        g = complement(disjoint_union(make_cycle(4), make_cycle(4)))
        assert is_k_regular(g, 5)


class TestIsomorphism:
    def test_cube_vs_twisted_cube(self, cube):
        assert not isomorphic(cube, make_twisted_cube())

    def test_shuffled_petersen(self, petersen):
        permutation = list(range(10))
        random.Random(7).shuffle(permutation)
        shuffled = relabel(petersen, permutation)
        mapping = find_isomorphism(petersen, shuffled)
        assert mapping is not None
        assert all(shuffled.has_edge(mapping[u], mapping[v]) for u, v in petersen.edges())

    def test_c6_vs_two_triangles(self):
        assert not isomorphic(make_cycle(6), disjoint_union(make_cycle(3), make_cycle(3)))

    def test_agrees_with_networkx(self, prism, k33):
        assert isomorphic(prism, k33) == nx.is_isomorphic(prism.to_networkx(), k33.to_networkx())

    def test_classes_keep_first(self, petersen, k33):
        shuffled = relabel(petersen, [9, 8, 7, 6, 5, 4, 3, 2, 1, 0])
        kept = isomorphism_classes([petersen, k33, shuffled, make_complete_bipartite(3, 3)])
        assert kept == [petersen, k33]
