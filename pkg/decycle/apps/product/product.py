"""
    Cartesian products
    ==================

    This module builds Cartesian products ``G □ H`` and exposes their layers. The vertex
    ``(g, h)`` of a product always gets the row-major index ``g * n2 + h``, so that certificates
    expressed as vertex lists are reproducible.

"""

from typing import Tuple

from decycle.apps.graph_core.graph import Graph, VertexSet, bits_of, iter_bits
from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import GraphSizeError, VertexIndexError


class ProductIndex:
    """ The bijection between ``[n1] x [n2]`` and ``[n1 * n2]`` used by every product. """

    __slots__ = ('n1', 'n2')

    def __init__(self, n1: int, n2: int):
        self.n1 = n1
        self.n2 = n2

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProductIndex):
            return NotImplemented
        return (self.n1, self.n2) == (other.n1, other.n2)

    def __hash__(self) -> int:
        return hash((self.n1, self.n2))

    def __repr__(self) -> str:
        return 'ProductIndex({}, {})'.format(self.n1, self.n2)

    @property
    def order(self) -> int:
        return self.n1 * self.n2

    def index(self, g: int, h: int) -> int:
        if not (0 <= g < self.n1 and 0 <= h < self.n2):
            raise VertexIndexError(
                'Pair ({}, {}) is outside {} x {}'.format(g, h, self.n1, self.n2))
        return g * self.n2 + h

    def pair(self, index: int) -> Tuple[int, int]:
        if not 0 <= index < self.order:
            raise VertexIndexError('Index {} is outside a product of order {}'.format(
                index, self.order))
        return divmod(index, self.n2)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    n1, n2 = g.n, h.n
    if n1 * n2 > decycle_settings.MAX_ORDER:
        raise GraphSizeError('The product of orders {} and {} exceeds the cap of {}'.format(
            n1, n2, decycle_settings.MAX_ORDER))
    adj = []
    for a in range(n1):
        g_row = g.adj[a]
        for b in range(n2):
            row = bits_of(a * n2 + w for w in iter_bits(h.adj[b]))
            row |= bits_of(c * n2 + b for c in iter_bits(g_row))
            adj.append(row)
    return Graph(n1 * n2, adj)


def layer_g(g: Graph, h: Graph, fixed_h: int) -> VertexSet:
    """ Returns the vertices of the G-layer ``G^h``, i.e. ``{(v, fixed_h) : v in V(g)}``. """
    if not 0 <= fixed_h < h.n:
        raise VertexIndexError('Vertex {} is not a vertex of the second factor'.format(fixed_h))
    return VertexSet(g.n * h.n, bits_of(v * h.n + fixed_h for v in range(g.n)))


def layer_h(g: Graph, h: Graph, fixed_g: int) -> VertexSet:
    """ Returns the vertices of the H-layer ``^gH``, i.e. ``{(fixed_g, w) : w in V(h)}``. """
    if not 0 <= fixed_g < g.n:
        raise VertexIndexError('Vertex {} is not a vertex of the first factor'.format(fixed_g))
    return VertexSet(g.n * h.n, bits_of(fixed_g * h.n + w for w in range(h.n)))


def cross_witness(gT: Graph, hT: Graph, i: int, j: int, k: int, l: int) -> VertexSet:  # noqa: E741
    """ Returns the union of two H-layers and two G-layers.

    When the factors are trees of orders ``n, n' >= 2`` the returned set induces a connected graph
    of order ``2n + 2n' - 4`` with at least as many edges as vertices, hence a cycle: a decycling
    set of the product must meet it.

    """
    if i == j:
        raise VertexIndexError('The two H-layers must differ (got {} twice)'.format(i))
    if k == l:
        raise VertexIndexError('The two G-layers must differ (got {} twice)'.format(k))
    return (
        layer_h(gT, hT, i) | layer_h(gT, hT, j) | layer_g(gT, hT, k) | layer_g(gT, hT, l)
    )
