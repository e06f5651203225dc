"""
    Tree canonical codes
    ====================

    This module computes canonical codes identifying trees up to isomorphism. A code is the AHU
    parenthesis string of the tree rooted at its centre, children codes being sorted
    lexicographically; a bicentral tree gets the smaller of the codes rooted at either centre. The
    module also provides the star / induced-P4 predicates used by the equality characterization.

"""

from typing import Dict, List

from decycle.apps.graph_core.graph import Graph, is_tree, iter_bits
from decycle.core.exceptions import GraphFormatError, NotATreeError


class TreeCode(bytes):
    """ Canonical byte string of a tree; its number of opening parentheses is the tree order. """

    @property
    def order(self) -> int:
        return self.count(b'(')

    def __str__(self) -> str:
        return self.decode('ascii')

    def __repr__(self) -> str:
        return 'TreeCode({!r})'.format(str(self))


def ensure_tree(t: Graph) -> None:
    if not is_tree(t):
        raise NotATreeError('{!r} is not a tree'.format(t))


def tree_centers(t: Graph) -> List[int]:
    """ Returns the one or two centres of a tree, found by repeatedly stripping its leaves. """
    degree = t.degrees()
    remaining = t.n
    leaves = [v for v in range(t.n) if degree[v] <= 1]
    removed = [False] * t.n
    while remaining > 2:
        next_leaves = []
        for leaf in leaves:
            removed[leaf] = True
            remaining -= 1
            for u in iter_bits(t.adj[leaf]):
                if not removed[u]:
                    degree[u] -= 1
                    if degree[u] == 1:
                        next_leaves.append(u)
        leaves = next_leaves
    return [v for v in range(t.n) if not removed[v]]


def rooted_code(t: Graph, root: int) -> str:
    """ Returns the AHU parenthesis string of ``t`` rooted at ``root``. """
    parent = {root: None}
    order = [root]
    for v in order:
        for u in iter_bits(t.adj[v]):
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    children: Dict[int, List[str]] = {v: [] for v in order}
    code = ''
    for v in reversed(order):
        code = '(' + ''.join(sorted(children[v])) + ')'
        if parent[v] is not None:
            children[parent[v]].append(code)
    return code


def canonical_code(t: Graph) -> TreeCode:
    ensure_tree(t)
    codes = [rooted_code(t, center) for center in tree_centers(t)]
    return TreeCode(min(codes).encode('ascii'))


def tree_from_code(code: bytes) -> Graph:
    """ Rebuilds the tree described by a code, labelling its vertices in preorder from the root. """
    text = bytes(code).decode('ascii')
    edges = []
    stack: List[int] = []
    count = 0
    for position, char in enumerate(text):
        if char == '(':
            if stack:
                edges.append((stack[-1], count))
            elif count:
                raise GraphFormatError('A tree code has a single root', position=position)
            stack.append(count)
            count += 1
        elif char == ')':
            if not stack:
                raise GraphFormatError('Unbalanced tree code', position=position)
            stack.pop()
        else:
            raise GraphFormatError('Unexpected character {!r} in tree code'.format(char), position)
    if stack or not count:
        raise GraphFormatError('Unbalanced tree code', position=len(text))
    return Graph.from_edges(count, edges)


def is_star(t: Graph) -> bool:
    """ Tells whether ``t`` is isomorphic to ``S_n``; true for the trees of order 1 and 2. """
    ensure_tree(t)
    return sum(1 for d in t.degrees() if d > 1) <= 1


def has_induced_p4(t: Graph) -> bool:
    """ Tells whether ``t`` contains an induced path ``a - u - v - b``. """
    ensure_tree(t)
    for u, v in t.edges():
        for a in iter_bits(t.adj[u] & ~(1 << v)):
            if t.has_edge(a, v):
                continue
            for b in iter_bits(t.adj[v] & ~(1 << u)):
                if b != a and not t.has_edge(a, b) and not t.has_edge(u, b):
                    return True
    return False
