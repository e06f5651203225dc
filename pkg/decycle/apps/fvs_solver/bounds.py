"""
    Decycling bounds
    ================

    This module provides the bounds used to prune the exact search:

    * a cycle packing: vertex-disjoint cycles found greedily, each of which needs its own deleted
      vertex;
    * a degree bound: deleting a vertex of degree ``d`` lowers the cyclomatic number
      ``m - n + c`` by at most ``d - 1``, and a forest has cyclomatic number 0;
    * a greedy decycling set, used as the initial incumbent.

"""

from typing import Set

from decycle.apps.graph_core.graph import Graph, VertexSet, is_forest_mask, iter_bits, popcount

from .multigraph import Multigraph


def two_core(mg: Multigraph, alive: Set[int]) -> Set[int]:
    """ Strips vertices of degree at most 1 (inside ``alive``) until none is left. """
    alive = set(alive)
    degree = {v: sum(m for u, m in mg.adj[v].items() if u in alive) for v in alive}
    stack = [v for v in alive if degree[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u, m in mg.adj[v].items():
            if u in alive:
                degree[u] -= m
                if degree[u] <= 1:
                    stack.append(u)
    return alive


def packed_cycle_count(mg: Multigraph) -> int:
    """ Counts vertex-disjoint cycles found greedily, always through the lowest live vertex. """
    alive = two_core(mg, set(mg.adj))
    count = 0
    blocked: Set[int] = set()
    while alive - blocked:
        s = min(alive - blocked)
        cycle = mg.shortest_cycle_through(s, alive)
        if cycle is None:
            blocked.add(s)
            continue
        count += 1
        alive = two_core(mg, alive - set(cycle))
        blocked &= alive
    return count


def cycle_packing_lower_bound(g: Graph) -> int:
    """ Counts vertex-disjoint cycles of ``g``, a lower bound on its decycling number. """
    return packed_cycle_count(Multigraph.from_graph(g))


def degree_lower_bound(mg: Multigraph) -> int:
    """ Smallest number of deletable vertices whose degrees can absorb the cyclomatic number. """
    excess = mg.edge_count() - len(mg) + len(mg.components())
    if excess <= 0:
        return 0
    degrees = sorted((mg.degree(v) for v in mg.adj if v not in mg.undeletable), reverse=True)
    needed = 0
    for d in degrees:
        if excess <= 0:
            break
        excess -= d - 1
        needed += 1
    if excess > 0:
        # Even deleting every deletable vertex cannot break all cycles.
        return len(degrees) + 1
    return needed


def _strip_low_degree(adj, mask: int) -> int:
    changed = True
    while changed:
        changed = False
        for v in iter_bits(mask):
            if popcount(adj[v] & mask) <= 1:
                mask &= ~(1 << v)
                changed = True
    return mask


def greedy_decycling_set(g: Graph) -> VertexSet:
    """ Returns a decycling set built by deleting maximum-degree vertices of the 2-core.

    Deleted vertices are then put back, most recent first, whenever the graph stays acyclic.

    """
    adj = g.adj
    full = (1 << g.n) - 1
    mask = _strip_low_degree(adj, full)
    removed = []
    while mask:
        v = max(iter_bits(mask), key=lambda x: (popcount(adj[x] & mask), -x))
        removed.append(v)
        mask = _strip_low_degree(adj, mask & ~(1 << v))
    chosen = 0
    for v in removed:
        chosen |= 1 << v
    for v in reversed(removed):
        candidate = chosen & ~(1 << v)
        if is_forest_mask(adj, full & ~candidate):
            chosen = candidate
    return VertexSet(g.n, chosen)
