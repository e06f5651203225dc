"""
    Explicit constructions
    ======================

    This module builds explicit decycling sets of tree products and the disjoint ``C_4`` families
    that bound the decycling number of general products from below:

    * ``star_layer_set``: in ``T □ S_n*``, every vertex of the central star layer except the one
      above vertex 0 of ``T``;
    * ``prism_cover_set``: in ``T □ P_2``, a minimum vertex cover of ``T`` in the first copy;
    * ``disjoint_c4_family``: one ``C_4`` per pair of edges from maximum matchings of both factors.

    Both decycling sets leave a tree, which is checked on top of the usual certificate checks.

"""

import logging
from typing import List

from decycle.apps.fvs_solver.certificates import (
    METHOD_CONSTRUCTION, OPTIMALITY_PROVEN, OPTIMALITY_UNKNOWN, DecyclingCertificate
)
from decycle.apps.graph_core.constructors import make_path, make_star, star_center
from decycle.apps.graph_core.graph import Graph, VertexSet, bits_of, is_tree, remove_vertices
from decycle.apps.matching_cover.cover import tree_vertex_cover
from decycle.apps.matching_cover.matching import maximum_matching
from decycle.apps.product.product import ProductIndex, cartesian_product
from decycle.apps.tree_enum.codes import ensure_tree
from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import CertificateError, GraphSizeError


logger = logging.getLogger(__name__)

STAR_LAYER = 'star-layer'
PRISM_COVER = 'prism-cover'


def _leaves_a_tree(product: Graph, vertices: VertexSet, name: str) -> None:
    if not is_tree(remove_vertices(product, vertices).graph):
        raise CertificateError('The {} construction does not leave a tree'.format(name))


def star_layer_set(t: Graph, n_star: int) -> DecyclingCertificate:
    """ Returns the star-layer decycling set of ``t □ S_{n_star}``.

    The certificate is marked optimal when the star is at least as large as the tree; otherwise
    only the range ``n_star <= value <= n - 1`` is known.

    """
    ensure_tree(t)
    if t.n < 2 or n_star < 2:
        raise GraphSizeError('The star-layer construction needs orders of at least 2, got {} and {}'
                             .format(t.n, n_star))
    product = cartesian_product(t, make_star(n_star))
    index = ProductIndex(t.n, n_star)
    centre = star_center(n_star)
    vertices = VertexSet(product.n, bits_of(index.index(v, centre) for v in range(1, t.n)))
    _leaves_a_tree(product, vertices, STAR_LAYER)
    return DecyclingCertificate(
        graph=product,
        vertices=vertices,
        value=len(vertices),
        method=METHOD_CONSTRUCTION,
        optimality=OPTIMALITY_PROVEN if n_star >= t.n else OPTIMALITY_UNKNOWN,
        construction=STAR_LAYER,
    )


def prism_cover_set(t: Graph) -> DecyclingCertificate:
    """ Returns the vertex-cover decycling set of the prism ``t □ P_2``; it is always optimal. """
    ensure_tree(t)
    product = cartesian_product(t, make_path(2))
    index = ProductIndex(t.n, 2)
    cover = tree_vertex_cover(t)
    vertices = VertexSet(product.n, bits_of(index.index(w, 0) for w in cover))
    _leaves_a_tree(product, vertices, PRISM_COVER)
    return DecyclingCertificate(
        graph=product,
        vertices=vertices,
        value=len(vertices),
        method=METHOD_CONSTRUCTION,
        optimality=OPTIMALITY_PROVEN,
        construction=PRISM_COVER,
    )


def disjoint_c4_family(g1: Graph, g2: Graph) -> List[VertexSet]:
    index = ProductIndex(g1.n, g2.n)
    if index.order > decycle_settings.MAX_ORDER:
        raise GraphSizeError('The product of orders {} and {} exceeds the cap of {}'.format(
            g1.n, g2.n, decycle_settings.MAX_ORDER))
    family = []
    for a, b in maximum_matching(g1):
        for c, d in maximum_matching(g2):
            family.append(VertexSet(index.order, bits_of(
                index.index(x, y) for x in (a, b) for y in (c, d))))
    logger.debug('Found %d disjoint 4-cycles in a product of order %d', len(family), index.order)
    return family
