"""
    Graph constructors
    ==================

    This module provides constructors for the named graph families: paths ``P_n``, stars ``S_n``
    (``K_{1,n-1}``, centre on the highest index) and cycles ``C_n``, plus disjoint unions.

"""

from decycle.core.exceptions import GraphSizeError

from .graph import Graph


def make_path(n: int) -> Graph:
    """ Returns ``P_n`` with the edges ``{i, i+1}``. """
    if n < 1:
        raise GraphSizeError('A path needs at least one vertex, got {}'.format(n))
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_star(n: int) -> Graph:
    """ Returns ``S_n``: the leaves ``0..n-2`` are all adjacent to the centre ``n-1``. """
    if n < 1:
        raise GraphSizeError('A star needs at least one vertex, got {}'.format(n))
    return Graph.from_edges(n, ((i, n - 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphSizeError('A cycle needs at least three vertices, got {}'.format(n))
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_center(n: int) -> int:
    return n - 1


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """ Returns ``g`` followed by a copy of ``h`` shifted by ``g.n``. """
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges)
