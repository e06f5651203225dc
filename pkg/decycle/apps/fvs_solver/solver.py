"""
    Branch-and-reduce solver
    ========================

    This module provides the exact decycling solver. The question "is there a decycling set of size
    at most k?" is answered by a branch-and-reduce search over a ``Multigraph``; ``k`` is raised one
    step at a time from a proven lower bound, so the first positive answer is optimal.

    The search alternates the following reductions with binary branching:

    * vertices of degree at most 1 are dropped;
    * a deletable vertex joined to an undeletable one by a parallel edge is forced into the set;
    * degree-2 vertices are smoothed, or their single double neighbour is forced into the set;
    * undeletable vertices are contracted with their undeletable neighbours.

    The branching vertex is a deletable vertex of maximum degree lying on a cycle (smallest index
    first), with endpoints of parallel edges preferred. The "in the set" branch is explored first.

"""

import logging
import time
from typing import List, Optional

from decycle.apps.graph_core.graph import Graph, VertexSet, bits_of
from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import BudgetExhausted, CertificateError, GraphSizeError

from .bounds import degree_lower_bound, greedy_decycling_set, packed_cycle_count
from .certificates import (
    METHOD_BRANCH_REDUCE, OPTIMALITY_CROSS_CHECKED, OPTIMALITY_PROVEN, OPTIMALITY_UNKNOWN,
    DecyclingCertificate, SolverBudget
)
from .multigraph import Multigraph
from .oracle import decycling_oracle


logger = logging.getLogger(__name__)


class _OutOfBudget(Exception):
    pass


def _is_forest(mg: Multigraph) -> bool:
    return mg.edge_count() - len(mg) + len(mg.components()) <= 0


class BranchAndReduceSolver:
    """ Computes the decycling number of a single graph.

    A solver instance holds the node and time counters of one invocation and must not be shared
    between graphs.

    """

    # The clock is only read every so many nodes.
    CLOCK_INTERVAL = 256

    def __init__(self, g: Graph, budget: Optional[SolverBudget] = None, floor: int = 0):
        if g.n > decycle_settings.MAX_ORDER:
            raise GraphSizeError(
                'The solver is limited to {} vertices, got {}'.format(
                    decycle_settings.MAX_ORDER, g.n))
        self.graph = g
        self.budget = budget or SolverBudget.default()
        self.floor = max(0, floor)
        self.nodes = 0
        self._started = None

    @property
    def wall_time(self) -> float:
        return 0.0 if self._started is None else time.perf_counter() - self._started

    def solve(self) -> DecyclingCertificate:
        self._started = time.perf_counter()
        g = self.graph
        incumbent = greedy_decycling_set(g)
        root = Multigraph.from_graph(g)
        lower = max(degree_lower_bound(root), packed_cycle_count(root), self.floor)
        logger.debug('Solving %r: lower bound %d, greedy incumbent %d', g, lower, len(incumbent))

        found = incumbent
        k = lower
        try:
            while k < len(incumbent):
                logger.debug('Deciding whether a decycling set of size %d exists', k)
                solution = self._decide(root.copy(), k)
                if solution is not None:
                    found = VertexSet(g.n, bits_of(solution))
                    break
                k += 1
        except _OutOfBudget:
            self._exhausted(incumbent, k)

        certificate = self._certificate(found, OPTIMALITY_PROVEN)
        logger.info('Decycling number of %r is %d (%d nodes, %.3fs)',
                    g, certificate.value, self.nodes, certificate.wall_time)
        return certificate

    def _certificate(self, vertices: VertexSet, optimality: str) -> DecyclingCertificate:
        return DecyclingCertificate(
            graph=self.graph,
            vertices=vertices,
            value=len(vertices),
            method=METHOD_BRANCH_REDUCE,
            optimality=optimality,
            nodes=self.nodes,
            wall_time=self.wall_time,
        )

    def _exhausted(self, incumbent: VertexSet, lower: int) -> None:
        certificate = self._certificate(incumbent, OPTIMALITY_UNKNOWN)
        logger.warning('Budget exhausted on %r after %d nodes: %d <= decycling number <= %d',
                       self.graph, self.nodes, lower, certificate.value)
        raise BudgetExhausted(
            'Solver budget exhausted after {} nodes and {:.1f}s; the decycling number lies in '
            '[{}, {}]'.format(self.nodes, certificate.wall_time, lower, certificate.value),
            incumbent=certificate,
            lower_bound=lower,
            nodes=self.nodes,
            wall_time=certificate.wall_time,
        )

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise _OutOfBudget
        if self.nodes % self.CLOCK_INTERVAL == 0 and self.wall_time > self.budget.time_limit:
            raise _OutOfBudget

    def _decide(self, mg: Multigraph, k: int) -> Optional[List[int]]:
        """ Returns a decycling set of ``mg`` of size at most ``k``, or ``None``.

        ``mg`` is consumed.

        """
        self._tick()
        forced: List[int] = []
        k = self._reduce(mg, k, forced)
        if k is None:
            return None
        if _is_forest(mg):
            return forced
        if k == 0:
            return None
        if degree_lower_bound(mg) > k or packed_cycle_count(mg) > k:
            return None

        v = self._pick(mg)
        if v is None:
            # Undeletable vertices are pairwise non-adjacent, so every cycle has a deletable vertex.
            raise CertificateError('No deletable vertex lies on a cycle of a cyclic multigraph')

        child = mg.copy()
        child.remove(v)
        found = self._decide(child, k - 1)
        if found is not None:
            return forced + [v] + found

        if mg.make_undeletable(v):
            found = self._decide(mg, k)
            if found is not None:
                return forced + found
        return None

    def _reduce(self, mg: Multigraph, k: int, forced: List[int]) -> Optional[int]:
        changed = True
        while changed:
            changed = False
            for v in sorted(mg.adj):
                if v not in mg.adj:
                    continue
                nbrs = mg.adj[v]
                degree = sum(nbrs.values())
                if degree <= 1:
                    mg.remove(v)
                    changed = True
                    continue

                deletable = v not in mg.undeletable
                if deletable and any(m >= 2 and u in mg.undeletable for u, m in nbrs.items()):
                    if k == 0:
                        return None
                    forced.append(v)
                    mg.remove(v)
                    k -= 1
                    changed = True
                    continue

                if degree != 2:
                    continue
                if len(nbrs) == 1:
                    # A double edge to a deletable neighbour: that neighbour covers both.
                    (a,) = nbrs
                    if k == 0:
                        return None
                    forced.append(a)
                    mg.remove(a)
                    k -= 1
                    changed = True
                    continue
                a, b = sorted(nbrs)
                if deletable and a in mg.undeletable and b in mg.undeletable:
                    continue
                mg.remove(v)
                mg.add_edge(a, b)
                changed = True
        return k

    def _pick(self, mg: Multigraph) -> Optional[int]:
        candidates = sorted(
            (v for v in mg.adj if v not in mg.undeletable),
            key=lambda v: (
                not any(m >= 2 for u, m in mg.adj[v].items() if u not in mg.undeletable),
                -mg.degree(v),
                v,
            ),
        )
        for v in candidates:
            if mg.on_cycle(v):
                return v
        return None


def decycling_number(
    g: Graph, budget: Optional[SolverBudget] = None, floor: int = 0, cross_check: bool = False,
) -> DecyclingCertificate:
    """ Returns a certificate of the decycling number of ``g``, with proven optimality.

    ``floor`` is an externally known lower bound; it must be valid or the answer may not be minimal.
    With ``cross_check`` the brute-force oracle is run as well on graphs small enough for it, and
    the certificate is marked as cross-checked. ``BudgetExhausted`` is raised when the budget runs
    out before optimality is proven.

    """
    certificate = BranchAndReduceSolver(g, budget, floor).solve()
    if cross_check and g.n <= decycle_settings.ORACLE_CROSS_CHECK_MAX_ORDER:
        expected = decycling_oracle(g)
        if expected.value != certificate.value:
            raise CertificateError(
                'Solver value {} disagrees with the oracle value {} on {!r}'.format(
                    certificate.value, expected.value, g))
        certificate = DecyclingCertificate(
            graph=g,
            vertices=certificate.vertices,
            value=certificate.value,
            method=certificate.method,
            optimality=OPTIMALITY_CROSS_CHECKED,
            nodes=certificate.nodes,
            wall_time=certificate.wall_time,
        )
    return certificate


def forest_number(g: Graph, budget: Optional[SolverBudget] = None) -> int:
    return g.n - decycling_number(g, budget).value
