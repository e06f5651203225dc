"""
    Matchings
    =========

    This module computes maximum matchings. General graphs go through an exact dynamic program over
    vertex subsets (the lowest vertex of a subset is either left unmatched or matched to one of its
    neighbours in the subset), which is affordable up to ``DECYCLE_MATCHING_MAX_ORDER`` vertices.
    Trees use the linear leaf-first greedy: scanning vertices from the deepest level up, a vertex
    still unmatched is matched to its parent when the parent is free.

"""

from functools import lru_cache
from typing import Iterable, List, Tuple

from decycle.apps.graph_core.graph import Graph, iter_bits
from decycle.apps.tree_enum.codes import ensure_tree
from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import GraphSizeError, VertexIndexError


class EdgeSet(tuple):
    """ A sorted tuple of edges ``(u, v)`` with ``u < v``. """

    @classmethod
    def of(cls, g: Graph, pairs: Iterable[Tuple[int, int]]) -> 'EdgeSet':
        edges = sorted((min(u, v), max(u, v)) for u, v in pairs)
        for u, v in edges:
            if not g.has_edge(u, v):
                raise VertexIndexError('{}-{} is not an edge of {!r}'.format(u, v, g))
        return cls(edges)

    def endpoints(self) -> List[int]:
        return sorted(v for edge in self for v in edge)

    def is_matching(self) -> bool:
        endpoints = self.endpoints()
        return len(endpoints) == len(set(endpoints))


def maximum_matching(g: Graph) -> EdgeSet:
    """ Returns a maximum matching of ``g`` by exact subset dynamic programming. """
    if g.n > decycle_settings.MATCHING_MAX_ORDER:
        raise GraphSizeError('Exact matchings are limited to {} vertices, got {}'.format(
            decycle_settings.MATCHING_MAX_ORDER, g.n))
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        size = best(rest)
        for u in iter_bits(adj[v] & rest):
            size = max(size, 1 + best(rest & ~(1 << u)))
        return size

    edges = []
    mask = (1 << g.n) - 1
    while mask:
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        target = best(mask)
        mask = rest
        if best(rest) == target:
            continue
        for u in iter_bits(adj[v] & rest):
            if 1 + best(rest & ~(1 << u)) == target:
                edges.append((v, u))
                mask = rest & ~(1 << u)
                break
    return EdgeSet.of(g, edges)


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))


def leaf_first_greedy(t: Graph) -> Tuple[EdgeSet, int]:
    """ Runs the leaf-first greedy on a tree rooted at vertex 0.

    Returns the maximum matching found and the bitset of the parents of its edges, which is a
    minimum vertex cover of the tree.

    """
    ensure_tree(t)
    parent = {0: None}
    order = [0]
    for v in order:
        for u in iter_bits(t.adj[v]):
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    matched = 0
    cover = 0
    edges = []
    for v in reversed(order):
        p = parent[v]
        if p is None or matched >> v & 1 or matched >> p & 1:
            continue
        matched |= 1 << v | 1 << p
        cover |= 1 << p
        edges.append((v, p))
    return EdgeSet.of(t, edges), cover


def tree_maximum_matching(t: Graph) -> EdgeSet:
    return leaf_first_greedy(t)[0]


def tree_matching_number(t: Graph) -> int:
    return len(tree_maximum_matching(t))
