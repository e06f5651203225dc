"""
    Solver multigraph
    =================

    This module defines the internal representation used by the branch-and-reduce solver. The
    reductions smooth degree-2 vertices and contract undeletable vertices, which creates parallel
    edges and self-loops, so the solver cannot work on the simple ``Graph`` of the public API.

    Self-loops are never stored: the operation that would create one reports it to the caller,
    which resolves it immediately.

"""

from typing import Dict, List, Optional, Set

from decycle.apps.graph_core.graph import Graph, iter_bits


class Multigraph:
    """ An undirected multigraph with a set of undeletable vertices.

    ``adj[v][u]`` is the multiplicity of the edge ``{u, v}``. Undeletable vertices are kept pairwise
    non-adjacent by contracting them as soon as they become adjacent.

    """

    __slots__ = ('adj', 'undeletable')

    def __init__(self, adj: Dict[int, Dict[int, int]], undeletable: Optional[Set[int]] = None):
        self.adj = adj
        self.undeletable = undeletable if undeletable is not None else set()

    @classmethod
    def from_graph(cls, g: Graph) -> 'Multigraph':
        return cls({v: {u: 1 for u in iter_bits(g.adj[v])} for v in range(g.n)})

    def copy(self) -> 'Multigraph':
        return Multigraph({v: dict(nbrs) for v, nbrs in self.adj.items()}, set(self.undeletable))

    def __len__(self) -> int:
        return len(self.adj)

    def degree(self, v: int) -> int:
        return sum(self.adj[v].values())

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in self.adj) // 2

    def remove(self, v: int) -> None:
        for u in self.adj.pop(v):
            del self.adj[u][v]
        self.undeletable.discard(v)

    def add_edge(self, a: int, b: int) -> None:
        self.adj[a][b] = self.adj[a].get(b, 0) + 1
        self.adj[b][a] = self.adj[b].get(a, 0) + 1

    def contract_into(self, keep: int, gone: int) -> None:
        """ Merges ``gone`` into ``keep``; the edges between them disappear. """
        for w, multiplicity in self.adj.pop(gone).items():
            del self.adj[w][gone]
            if w == keep:
                continue
            self.adj[keep][w] = self.adj[keep].get(w, 0) + multiplicity
            self.adj[w][keep] = self.adj[w].get(keep, 0) + multiplicity
        self.undeletable.discard(gone)

    def make_undeletable(self, v: int) -> bool:
        """ Marks ``v`` undeletable and contracts it with its undeletable neighbours.

        Returns ``False`` when this closes a cycle made of undeletable vertices only.

        """
        self.undeletable.add(v)
        while True:
            fixed = sorted(u for u in self.adj[v] if u in self.undeletable)
            if not fixed:
                return True
            u = fixed[0]
            if self.adj[v][u] >= 2:
                return False
            self.contract_into(v, u)

    def components(self) -> List[Set[int]]:
        seen: Set[int] = set()
        components = []
        for start in sorted(self.adj):
            if start in seen:
                continue
            component = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for u in self.adj[v]:
                    if u not in component:
                        component.add(u)
                        stack.append(u)
            seen |= component
            components.append(component)
        return components

    def on_cycle(self, v: int) -> bool:
        """ Tells whether some cycle goes through ``v``. """
        nbrs = self.adj[v]
        if any(m >= 2 for m in nbrs.values()):
            return True
        label: Dict[int, int] = {}
        for first in sorted(nbrs):
            if first in label:
                return True
            label[first] = first
            stack = [first]
            while stack:
                w = stack.pop()
                for x in self.adj[w]:
                    if x != v and x not in label:
                        label[x] = first
                        stack.append(x)
        return False

    def shortest_cycle_through(self, s: int, alive: Set[int]) -> Optional[List[int]]:
        """ Returns the vertices of a shortest cycle through ``s`` inside ``alive``, if any. """
        nbrs = {u: m for u, m in self.adj[s].items() if u in alive}
        for u in sorted(nbrs):
            if nbrs[u] >= 2:
                return [s, u]
        parent = {s: None}
        branch = {s: None}
        dist = {s: 0}
        queue = [s]
        for v in queue:
            for u in sorted(self.adj[v]):
                if u not in alive or u in dist:
                    continue
                parent[u] = v
                branch[u] = u if v == s else branch[v]
                dist[u] = dist[v] + 1
                queue.append(u)
        best = None
        for v in queue:
            if v == s:
                continue
            for u in self.adj[v]:
                if u in dist and u != s and u > v and branch[u] != branch[v]:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best[0]:
                        best = (length, v, u)
        if best is None:
            return None
        _, a, b = best
        cycle = []
        for end in (a, b):
            w = end
            while w != s:
                cycle.append(w)
                w = parent[w]
        return [s] + cycle
