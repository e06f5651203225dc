import pytest

from decycle.apps.fvs_solver.bounds import (
    cycle_packing_lower_bound, degree_lower_bound, greedy_decycling_set, two_core
)
from decycle.apps.fvs_solver.multigraph import Multigraph
from decycle.apps.fvs_solver.oracle import decycling_oracle
from decycle.apps.graph_core.constructors import disjoint_union, make_cycle, make_path
from decycle.apps.graph_core.graph import Graph, is_forest_mask
from decycle.apps.product.product import cartesian_product
from decycle.test.factories import build_graph, build_tree


def complete_graph(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


class TestMultigraph(object):
    def test_contracts_adjacent_undeletable_vertices(self):
        # Setup
        mg = Multigraph.from_graph(make_cycle(3))
        # Run
        assert mg.make_undeletable(0)
        assert mg.make_undeletable(1)
        # Check
        assert set(mg.adj) == {1, 2}
        assert mg.adj[1][2] == 2
        assert mg.undeletable == {1}

    def test_reports_a_cycle_of_undeletable_vertices(self):
        # Setup
        mg = Multigraph.from_graph(make_cycle(3))
        mg.make_undeletable(0)
        mg.make_undeletable(1)
        # Run & check
        assert not mg.make_undeletable(2)

    def test_can_tell_vertices_on_cycles(self):
        # Setup
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
        mg = Multigraph.from_graph(g)
        # Run & check
        assert mg.on_cycle(0)
        assert mg.on_cycle(2)
        assert not mg.on_cycle(3)

    def test_finds_a_shortest_cycle_through_a_vertex(self):
        # Setup
        mg = Multigraph.from_graph(cartesian_product(make_path(2), make_path(4)))
        # Run
        cycle = mg.shortest_cycle_through(0, set(mg.adj))
        # Check
        assert sorted(cycle) == [0, 1, 4, 5]

    def test_finds_no_cycle_in_a_tree(self):
        # Setup
        mg = Multigraph.from_graph(build_tree(n=7))
        # Run & check
        assert mg.shortest_cycle_through(0, set(mg.adj)) is None


class TestLowerBounds(object):
    def test_two_core_strips_trees(self):
        # Setup
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        mg = Multigraph.from_graph(g)
        # Run & check
        assert two_core(mg, set(mg.adj)) == {0, 1, 2}
        assert two_core(Multigraph.from_graph(build_tree(n=6)), set(range(6))) == set()

    def test_packs_disjoint_cycles(self):
        # Run & check
        assert cycle_packing_lower_bound(disjoint_union(make_cycle(3), make_cycle(5))) == 2
        assert cycle_packing_lower_bound(build_tree(n=8)) == 0

    def test_degree_bound_of_complete_graphs(self):
        # Run & check
        assert degree_lower_bound(Multigraph.from_graph(complete_graph(4))) == 2
        assert degree_lower_bound(Multigraph.from_graph(make_cycle(6))) == 1
        assert degree_lower_bound(Multigraph.from_graph(build_tree(n=5))) == 0

    def test_packs_four_cycles_in_the_4_by_4_torus(self):
        # Setup
        g = cartesian_product(make_cycle(4), make_cycle(4))
        # Run & check
        assert cycle_packing_lower_bound(g) >= 4

    @pytest.mark.parametrize('seed', range(25))
    def test_bounds_enclose_the_decycling_number(self, seed):
        # Setup
        g = build_graph(n=4 + seed % 9, p=0.35, seed=seed)
        # Run
        value = decycling_oracle(g).value
        # Check
        assert cycle_packing_lower_bound(g) <= value
        assert degree_lower_bound(Multigraph.from_graph(g)) <= value
        assert value <= len(greedy_decycling_set(g))


class TestGreedyDecyclingSet(object):
    @pytest.mark.parametrize('n', [4, 8, 12, 16])
    def test_leaves_a_forest(self, n):
        # Setup
        g = build_graph(n=n, p=0.4)
        # Run
        chosen = greedy_decycling_set(g)
        # Check
        assert is_forest_mask(g.adj, chosen.complement().bits)

    def test_is_empty_on_forests(self):
        # Run & check
        assert not greedy_decycling_set(build_tree(n=9))
