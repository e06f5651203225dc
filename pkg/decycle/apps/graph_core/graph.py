"""
    Graph representation
    ====================

    This module defines the ``Graph`` and ``VertexSet`` abstractions used by every django-decycle
    application. A graph lives on the vertices ``0..n-1`` and stores its adjacency as one bitset (a
    Python integer) per vertex; a vertex set is a single bitset scoped to a graph's universe. Both
    are immutable once built.

"""

from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import GraphSizeError, VertexIndexError


def popcount(bits: int) -> int:
    return bits.bit_count()


def iter_bits(bits: int) -> Iterator[int]:
    """ Yields the indices of the set bits in increasing order. """
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_of(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


class VertexSet:
    """ A subset of the vertices of a graph with ``n`` vertices.

    Iteration always happens in increasing index order.

    """

    __slots__ = ('n', 'bits')

    def __init__(self, n: int, bits: int = 0):
        if bits < 0 or bits >> n:
            raise VertexIndexError('Vertex set {:#x} does not fit in {} vertices'.format(bits, n))
        self.n = n
        self.bits = bits

    @classmethod
    def from_iterable(cls, n: int, vertices: Iterable[int]) -> 'VertexSet':
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise VertexIndexError('Vertex {} is out of range for {} vertices'.format(v, n))
        return cls(n, bits_of(vertices))

    @classmethod
    def full(cls, n: int) -> 'VertexSet':
        return cls(n, (1 << n) - 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.bits >> v & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return 'VertexSet(n={}, {})'.format(self.n, self.as_list())

    def _check_universe(self, other: 'VertexSet') -> None:
        if self.n != other.n:
            raise VertexIndexError(
                'Vertex sets of universes {} and {} cannot be combined'.format(self.n, other.n)
            )

    def __or__(self, other: 'VertexSet') -> 'VertexSet':
        self._check_universe(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: 'VertexSet') -> 'VertexSet':
        self._check_universe(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: 'VertexSet') -> 'VertexSet':
        self._check_universe(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def __le__(self, other: 'VertexSet') -> bool:
        self._check_universe(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: 'VertexSet') -> bool:
        self._check_universe(other)
        return self.bits & other.bits == 0

    def complement(self) -> 'VertexSet':
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def as_list(self) -> List[int]:
        return list(iter_bits(self.bits))


class Graph:
    """ An undirected simple graph on the vertices ``0..n-1``.

    ``adj[v]`` is the bitset of the neighbours of ``v``. The adjacency must be symmetric and free of
    self-loops; the number of edges is computed once at construction time.

    """

    __slots__ = ('n', 'adj', 'edge_count')

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= decycle_settings.MAX_ORDER:
            raise GraphSizeError(
                'A graph must have between 0 and {} vertices, got {}'.format(
                    decycle_settings.MAX_ORDER, n,
                ),
            )
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphSizeError('Expected {} adjacency rows, got {}'.format(n, len(adj)))
        degree_sum = 0
        for v, row in enumerate(adj):
            if row < 0 or row >> n:
                raise VertexIndexError('Neighbourhood of {} leaves the vertex range'.format(v))
            if row >> v & 1:
                raise VertexIndexError('Vertex {} carries a self-loop'.format(v))
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise VertexIndexError('Edge {}-{} is not symmetric'.format(v, u))
            degree_sum += popcount(row)
        self.n = n
        self.adj = adj
        self.edge_count = degree_sum // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        """ Builds a graph from an iterable of vertex pairs; repeated pairs collapse. """
        if not 0 <= n <= decycle_settings.MAX_ORDER:
            raise GraphSizeError(
                'A graph must have between 0 and {} vertices, got {}'.format(
                    decycle_settings.MAX_ORDER, n,
                ),
            )
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexIndexError('Edge {}-{} is out of range for {} vertices'.format(u, v, n))
            if u == v:
                raise VertexIndexError('Vertex {} carries a self-loop'.format(u))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return 'Graph(n={}, m={})'.format(self.n, self.edge_count)

    @property
    def is_empty(self) -> bool:
        return self.n == 0

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> List[int]:
        return [popcount(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """ Returns the edges as pairs ``(u, v)`` with ``u < v`` in lexicographic order. """
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]


class InducedSubgraph(NamedTuple):
    """ An induced subgraph along with ``labels[i]``, the original index of its vertex ``i``. """

    graph: Graph
    labels: Tuple[int, ...]

    @property
    def is_empty(self) -> bool:
        return self.graph.is_empty


def _component_of(adj: Sequence[int], start: int, mask: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= adj[v]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen


def is_forest_mask(adj: Sequence[int], mask: int) -> bool:
    """ Tells whether the subgraph induced by the bitset ``mask`` is acyclic.

    A graph is a forest iff its number of edges equals its number of vertices minus its number of
    connected components.

    """
    twice_edges = 0
    for v in iter_bits(mask):
        twice_edges += popcount(adj[v] & mask)
    components = 0
    remaining = mask
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        remaining &= ~_component_of(adj, start, mask)
        components += 1
    return twice_edges // 2 == popcount(mask) - components


def is_forest(g: Graph) -> bool:
    return is_forest_mask(g.adj, (1 << g.n) - 1)


def connected_components(g: Graph) -> List[VertexSet]:
    """ Returns the connected components of ``g`` ordered by their smallest vertex. """
    components = []
    full = (1 << g.n) - 1
    remaining = full
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        component = _component_of(g.adj, start, full)
        components.append(VertexSet(g.n, component))
        remaining &= ~component
    return components


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.edge_count == g.n - 1


def induced_subgraph(g: Graph, keep: VertexSet, allow_empty: bool = False) -> InducedSubgraph:
    """ Returns ``G[keep]`` with its vertices relabeled ``0..|keep|-1`` in increasing order. """
    if keep.n != g.n:
        raise VertexIndexError(
            'Vertex set of universe {} does not belong to a graph of order {}'.format(keep.n, g.n)
        )
    if not keep and not allow_empty:
        raise GraphSizeError('The induced subgraph on an empty vertex set is not allowed here')
    labels = tuple(keep)
    position = {old: new for new, old in enumerate(labels)}
    adj = []
    for old in labels:
        adj.append(bits_of(position[u] for u in iter_bits(g.adj[old] & keep.bits)))
    return InducedSubgraph(Graph(len(labels), adj), labels)


def remove_vertices(g: Graph, removed: VertexSet) -> InducedSubgraph:
    """ Shortcut for the subgraph induced by the complement of ``removed``. """
    return induced_subgraph(g, removed.complement(), allow_empty=True)
