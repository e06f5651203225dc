"""
    Vertex covers
    =============

    This module computes minimum vertex covers of trees. The cover is read off the leaf-first greedy
    matching (the parent side of every matched edge), so its size equals the matching number, as
    König–Egerváry guarantees for bipartite graphs.

"""

from decycle.apps.graph_core.graph import Graph, VertexSet, iter_bits

from .matching import leaf_first_greedy


def is_vertex_cover(g: Graph, cover: VertexSet) -> bool:
    """ Tells whether every edge of ``g`` has an endpoint in ``cover``. """
    outside = ~cover.bits & ((1 << g.n) - 1)
    return all(g.adj[v] & outside == 0 for v in iter_bits(outside))


def tree_vertex_cover(t: Graph) -> VertexSet:
    return VertexSet(t.n, leaf_first_greedy(t)[1])
