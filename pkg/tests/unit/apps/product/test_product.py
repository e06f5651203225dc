import json
import os

import networkx as nx
import pytest

from decycle.apps.graph_core.constructors import make_cycle, make_path, make_star
from decycle.apps.graph_core.formats import decode_graph6
from decycle.apps.graph_core.graph import induced_subgraph, is_connected, is_forest
from decycle.apps.product.export import INDEX_CONVENTION, product_sidecar, write_product
from decycle.apps.product.product import (
    ProductIndex, cartesian_product, cross_witness, layer_g, layer_h
)
from decycle.core.exceptions import GraphSizeError, VertexIndexError
from decycle.test.factories import build_graph, build_tree


def as_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestProductIndex(object):
    def test_uses_row_major_indices(self):
        # Setup
        index = ProductIndex(3, 4)
        # Run & check
        assert index.order == 12
        assert index.index(2, 1) == 9
        assert index.pair(9) == (2, 1)

    def test_rejects_pairs_outside_the_product(self):
        # Setup
        index = ProductIndex(2, 2)
        # Run & check
        with pytest.raises(VertexIndexError):
            index.index(2, 0)
        with pytest.raises(VertexIndexError):
            index.pair(4)


class TestCartesianProduct(object):
    def test_is_isomorphic_to_the_networkx_product(self):
        # Setup
        g = build_graph(n=4, p=0.6)
        h = build_tree(n=5)
        # Run
        product = cartesian_product(g, h)
        # Check
        expected = nx.cartesian_product(as_networkx(g), as_networkx(h))
        assert nx.is_isomorphic(as_networkx(product), expected)
        assert product.edge_count == g.edge_count * h.n + h.edge_count * g.n

    def test_connects_a_vertex_to_both_layers(self):
        # Setup
        g = make_path(3)
        h = make_path(2)
        index = ProductIndex(3, 2)
        # Run
        product = cartesian_product(g, h)
        # Check
        assert product.neighbors(index.index(1, 0)) == sorted(
            [index.index(0, 0), index.index(2, 0), index.index(1, 1)]
        )

    def test_builds_the_grid_and_the_torus(self):
        # Run & check
        assert cartesian_product(make_path(4), make_path(5)).edge_count == 3 * 5 + 4 * 4
        assert cartesian_product(make_cycle(3), make_cycle(4)).degrees() == [4] * 12

    def test_enforces_the_order_cap(self):
        # Run & check
        with pytest.raises(GraphSizeError):
            cartesian_product(make_path(5), make_path(13))


class TestLayers(object):
    def test_layers_induce_copies_of_the_factors(self):
        # Setup
        g = make_star(4)
        h = make_path(3)
        product = cartesian_product(g, h)
        # Run
        g_layer = induced_subgraph(product, layer_g(g, h, 1)).graph
        h_layer = induced_subgraph(product, layer_h(g, h, 3)).graph
        # Check
        assert g_layer == g
        assert h_layer == h

    def test_cross_witness_contains_a_cycle(self):
        # Setup
        g = build_tree(n=5)
        h = build_tree(n=4)
        product = cartesian_product(g, h)
        # Run
        witness = cross_witness(g, h, 0, 4, 1, 3)
        # Check
        sub = induced_subgraph(product, witness).graph
        assert len(witness) == 2 * 5 + 2 * 4 - 4
        assert is_connected(sub)
        assert not is_forest(sub)

    def test_cross_witness_needs_distinct_layers(self):
        # Run & check
        with pytest.raises(VertexIndexError):
            cross_witness(make_path(3), make_path(3), 1, 1, 0, 2)


class TestProductExport(object):
    def test_sidecar_describes_the_product(self):
        # Run
        sidecar = product_sidecar(make_path(2), make_cycle(4), '(())', 'C4')
        # Check
        assert sidecar['order'] == 8
        assert sidecar['size'] == 12
        assert sidecar['index_convention'] == INDEX_CONVENTION
        assert [f['descriptor'] for f in sidecar['factors']] == ['(())', 'C4']
        assert decode_graph6(sidecar['graph6']) == cartesian_product(make_path(2), make_cycle(4))

    def test_writes_graph6_and_json_files(self, tmpdir):
        # Setup
        directory = str(tmpdir.join('export'))
        # Run
        graph6_path, sidecar_path = write_product(
            make_path(3), make_path(3), '(()())', '(()())', directory, 'grid')
        # Check
        assert os.path.basename(graph6_path) == 'grid.g6'
        with open(graph6_path) as f:
            assert decode_graph6(f.read()).n == 9
        with open(sidecar_path) as f:
            assert json.load(f)['size'] == 12
