"""
    Product export
    ==============

    This module writes a product instance as a graph6 line along with a sidecar JSON document
    naming the factors (by tree code or family descriptor) and the vertex index convention.

"""

import json
import os
from typing import Dict, Tuple

from decycle.apps.graph_core.formats import encode_graph6
from decycle.apps.graph_core.graph import Graph

from .product import cartesian_product


INDEX_CONVENTION = 'row-major: (g, h) -> g * n2 + h'


def product_sidecar(g: Graph, h: Graph, g_descriptor: str, h_descriptor: str) -> Dict:
    product = cartesian_product(g, h)
    return {
        'factors': [
            {'descriptor': g_descriptor, 'order': g.n, 'graph6': encode_graph6(g)},
            {'descriptor': h_descriptor, 'order': h.n, 'graph6': encode_graph6(h)},
        ],
        'index_convention': INDEX_CONVENTION,
        'order': product.n,
        'size': product.edge_count,
        'graph6': encode_graph6(product),
    }


def write_product(
    g: Graph, h: Graph, g_descriptor: str, h_descriptor: str, directory: str, stem: str,
) -> Tuple[str, str]:
    """ Writes ``<stem>.g6`` and ``<stem>.json`` into ``directory``; returns both paths. """
    sidecar = product_sidecar(g, h, g_descriptor, h_descriptor)
    os.makedirs(directory, exist_ok=True)
    graph6_path = os.path.join(directory, stem + '.g6')
    sidecar_path = os.path.join(directory, stem + '.json')
    with open(graph6_path, 'w', encoding='utf-8') as f:
        f.write(sidecar['graph6'] + '\n')
    with open(sidecar_path, 'w', encoding='utf-8') as f:
        json.dump(sidecar, f, indent=2, sort_keys=True)
        f.write('\n')
    return graph6_path, sidecar_path
