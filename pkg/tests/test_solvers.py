import random

import networkx as nx
import pytest

from grundylab.domination.forcing import (
    check_history, closure_mask, forcing_closure, is_zero_forcing_set,
)
from grundylab.domination.sequences import Variant, is_valid, validate_witness
from grundylab.domination.solvers import brute_force_grundy, grundy_number, zero_forcing_number
from grundylab.families.named import (
    make_complete, make_complete_bipartite, make_cycle, make_path, make_prism,
)
from grundylab.graphs import build_graph, disjoint_union, graph_from_networkx, mask_of
from grundylab.utils.config import SolverConfig
from grundylab.utils.error_handler import SolverError
from grundylab.verify.enumeration import enumerate_cubic


class TestGrundyNumber:
    def test_c5(self, c5):
        result = grundy_number(c5)
        assert result.value == 3
        assert result.invariant == "grundy"
        validate_witness(result.sequence, Variant.GRUNDY)

    def test_k33(self, k33):
        assert grundy_number(k33).value == 3

    def test_complete(self):
        assert grundy_number(make_complete(5)).value == 1

    def test_z_x2(self, x2):
        result = grundy_number(x2.graph, Variant.ZGRUNDY)
        assert result.value == 7
        assert is_valid(result.sequence, Variant.ZGRUNDY)

    def test_z_n_yy(self, n_yy):
        assert grundy_number(n_yy, Variant.ZGRUNDY).value == 4

    def test_z_prism(self, prism):
        assert grundy_number(prism, Variant.ZGRUNDY).value == 3

    def test_diamond(self, diamond):
        assert grundy_number(diamond).value == 2
        assert grundy_number(diamond, Variant.ZGRUNDY).value == 2

    @pytest.mark.parametrize("n", range(3, 13))
    def test_cycles(self, n):
        cycle = make_cycle(n)
        assert grundy_number(cycle).value == n - 2
        assert grundy_number(cycle, Variant.ZGRUNDY).value == n - 2

    def test_z_with_isolated_vertex(self):
        with pytest.raises(SolverError):
            grundy_number(build_graph(3, [(0, 1)]), Variant.ZGRUNDY)

    def test_closed_with_isolated_vertex(self):
        # an isolated vertex footprints itself once
        assert grundy_number(build_graph(3, [(0, 1)])).value == 2

    def test_empty_graph(self):
        with pytest.raises(SolverError):
            grundy_number(build_graph(0, []))

    def test_branch_and_bound_fallback(self, petersen):
        result = grundy_number(petersen, Variant.ZGRUNDY, SolverConfig(memo_state_limit=5))
        assert result.stats.method == "branch-and-bound"
        assert result.value == 5
        validate_witness(result.sequence, Variant.ZGRUNDY)

    @pytest.mark.parametrize("variant", [Variant.GRUNDY, Variant.ZGRUNDY])
    def test_branch_and_bound_on_two_components(self, variant):
        # the second step dominates a whole fresh K4, more than k - 1 vertices
        g = disjoint_union(make_complete(4), make_complete(4))
        result = grundy_number(g, variant, SolverConfig(memo_state_limit=1))
        assert result.stats.method == "branch-and-bound"
        assert result.value == 2
        assert result.sequence.footprint_sizes() == [4, 4]
        assert brute_force_grundy(g, variant) == 2

    def test_memo_method(self, petersen):
        result = grundy_number(petersen)
        assert result.stats.method == "memo"
        assert result.value == 5
        assert result.witness == result.sequence


class TestBruteForce:
    def test_k4(self, k4):
        assert brute_force_grundy(k4) == 1

    def test_z_k33(self, k33):
        assert brute_force_grundy(k33, Variant.ZGRUNDY) == 2

    def test_order_guard(self):
        with pytest.raises(SolverError):
            brute_force_grundy(make_cycle(11))

    @pytest.mark.parametrize("n", [4, 6, 8, 10])
    @pytest.mark.parametrize("variant", [Variant.GRUNDY, Variant.ZGRUNDY])
    def test_agrees_with_memo_search(self, n, variant):
        for g in enumerate_cubic(n):
            assert brute_force_grundy(g, variant) == grundy_number(g, variant).value, g.label

    def test_agrees_on_petersen(self, petersen):
        assert brute_force_grundy(petersen) == 5
        assert brute_force_grundy(petersen, Variant.ZGRUNDY) == 5

    def test_agrees_on_paths(self):
        for n in range(2, 8):
            path = make_path(n)
            assert brute_force_grundy(path) == grundy_number(path).value

    def test_agrees_on_random_connected_graphs(self):
        rng = random.Random(2024)
        checked = 0
        while checked < 500:
            nx_graph = nx.gnp_random_graph(rng.randint(2, 8), rng.uniform(0.25, 0.75), seed=rng)
            if not nx.is_connected(nx_graph):
                continue
            g = graph_from_networkx(nx_graph)
            for variant in (Variant.GRUNDY, Variant.ZGRUNDY):
                assert brute_force_grundy(g, variant) == grundy_number(g, variant).value, nx_graph.edges()
            checked += 1


class TestForcingClosure:
    def test_path_zipper(self):
        state = forcing_closure(make_path(4), [0])
        assert state.is_complete(make_path(4))
        assert state.history == ((0, 1), (1, 2), (2, 3))

    def test_square_single_seed(self):
        state = forcing_closure(make_cycle(4), [0])
        assert state.blue_vertices == [0]
        assert state.history == ()

    def test_complement_of_z_sequence(self, petersen):
        order = grundy_number(petersen, Variant.ZGRUNDY).sequence.order
        seed = petersen.full_mask & ~mask_of(order)
        state = forcing_closure(petersen, seed)
        assert state.is_complete(petersen)
        assert check_history(petersen, seed, state.history)

    def test_closure_mask_agrees(self, petersen):
        for seed in ([0, 1, 2, 3, 5], [0, 1], [5, 6, 7, 8, 9]):
            assert closure_mask(petersen.rows, mask_of(seed)) == forcing_closure(petersen, seed).blue

    def test_check_history_rejects_bad_force(self):
        assert not check_history(make_cycle(4), [0], [(0, 1)])


class TestZeroForcingNumber:
    def test_petersen(self, petersen):
        result = zero_forcing_number(petersen)
        assert result.value == 5
        assert result.stats.cross_checked
        assert is_zero_forcing_set(petersen, result.seed)

    def test_complete(self):
        assert zero_forcing_number(make_complete(5)).value == 4

    @pytest.mark.parametrize("n", [3, 6, 9])
    def test_cycles(self, n):
        assert zero_forcing_number(make_cycle(n)).value == 2

    def test_k33(self):
        assert zero_forcing_number(make_complete_bipartite(3, 3)).value == 4

    def test_prism(self):
        assert zero_forcing_number(make_prism()).value == 3

    def test_isolated_vertices_join_the_seed(self):
        g = build_graph(4, [(0, 1), (1, 2)])
        result = zero_forcing_number(g)
        assert result.value == 2
        assert 3 in result.seed
        assert is_zero_forcing_set(g, result.seed)

    def test_direct_search_skipped_above_limit(self, petersen):
        result = zero_forcing_number(petersen, SolverConfig(direct_forcing_max_order=4))
        assert result.value == 5
        assert not result.stats.cross_checked

    @pytest.mark.parametrize("n", [4, 6, 8, 10])
    def test_duality_on_cubic_classes(self, n):
        for g in enumerate_cubic(n):
            result = zero_forcing_number(g)
            assert result.stats.cross_checked
            assert result.value + grundy_number(g, Variant.ZGRUNDY).value == n
