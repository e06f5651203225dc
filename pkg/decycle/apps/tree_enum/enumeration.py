"""
    Tree enumeration
    ================

    This module enumerates the trees of a given order up to isomorphism. Small orders decode every
    Prüfer sequence (``n^(n-2)`` labelled trees) and deduplicate them by canonical code; larger
    orders grow the classes of order ``n-1`` by one leaf in every possible position. Both strategies
    return the tree rebuilt from each code, so the representatives do not depend on the strategy.

"""

import heapq
import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from decycle.apps.graph_core.formats import encode_graph6
from decycle.apps.graph_core.graph import Graph
from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import GraphSizeError

from .codes import TreeCode, canonical_code, tree_from_code


logger = logging.getLogger(__name__)


def prufer_to_edges(sequence: Sequence[int], n: int) -> List[Tuple[int, int]]:
    """ Decodes a Prüfer sequence of length ``n-2`` over ``0..n-1`` into a list of edges. """
    if n == 1:
        return []
    degree = [1] * n
    for v in sequence:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def _check_order(n: int) -> None:
    if not 1 <= n <= decycle_settings.TREE_MAX_ORDER:
        raise GraphSizeError(
            'Trees can be enumerated for orders 1..{}, got {}'.format(
                decycle_settings.TREE_MAX_ORDER, n,
            ),
        )


def prufer_codes(n: int) -> Dict[TreeCode, int]:
    """ Returns every tree class of order ``n`` with its number of labelled trees. """
    counts: Dict[TreeCode, int] = {}
    for sequence in itertools.product(range(n), repeat=max(n - 2, 0)):
        code = canonical_code(Graph.from_edges(n, prufer_to_edges(sequence, n)))
        counts[code] = counts.get(code, 0) + 1
    return counts


def extend_by_one_leaf(trees: Iterable[Graph]) -> List[TreeCode]:
    codes = set()
    for t in trees:
        for v in range(t.n):
            grown = Graph.from_edges(t.n + 1, t.edges() + [(v, t.n)])
            codes.add(canonical_code(grown))
    return sorted(codes)


@lru_cache(maxsize=None)
def _tree_codes(n: int) -> Tuple[TreeCode, ...]:
    # Prüfer decoding touches n^(n-2) sequences: 16807 at n = 7 but 4.8 million at n = 9, so the
    # leaf-extension generator takes over above PRUFER_MAX_ORDER.
    if n <= max(decycle_settings.PRUFER_MAX_ORDER, 2):
        codes = sorted(prufer_codes(n))
        strategy = 'prufer'
    else:
        codes = extend_by_one_leaf(tree_from_code(code) for code in _tree_codes(n - 1))
        strategy = 'leaf-extension'
    logger.debug('Enumerated %d tree classes of order %d (%s)', len(codes), n, strategy)
    return tuple(codes)


def tree_codes(n: int) -> List[TreeCode]:
    """ Returns the sorted canonical codes of all trees of order ``n``. """
    _check_order(n)
    return list(_tree_codes(n))


def enumerate_trees(n: int) -> List[Graph]:
    """ Returns one tree per isomorphism class of order ``n``, sorted by canonical code. """
    return [tree_from_code(code) for code in tree_codes(n)]


def trees_as_graph6(n: int) -> List[str]:
    """ Returns the graph6 lines of the trees of order ``n``, sorted by canonical code. """
    return [encode_graph6(t) for t in enumerate_trees(n)]


def tree_code_pairs(n_min: int, n_max: int) -> List[Tuple[TreeCode, TreeCode]]:
    """ Returns the unordered pairs of tree classes with orders ``n_min <= n <= n' <= n_max``.

    The first code of a pair always belongs to the smaller order.

    """
    _check_order(max(n_min, 1))
    _check_order(n_max)
    pairs = []
    for n in range(n_min, n_max + 1):
        pairs.extend(itertools.combinations_with_replacement(_tree_codes(n), 2))
        for n2 in range(n + 1, n_max + 1):
            pairs.extend(itertools.product(_tree_codes(n), _tree_codes(n2)))
    return pairs
