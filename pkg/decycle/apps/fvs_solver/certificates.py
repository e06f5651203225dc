"""
    Decycling certificates
    ======================

    This module defines ``DecyclingCertificate``, an explicit decycling set attached to the graph it
    decycles, and ``SolverBudget``. A certificate validates itself when it is built: the vertices
    left outside the set must induce a forest and the claimed value must be the size of the set.
    This check is always on, whatever produced the certificate.

"""

from dataclasses import dataclass, field
from typing import Dict, Optional

from django.core.exceptions import ImproperlyConfigured

from decycle.apps.graph_core.formats import encode_graph6
from decycle.apps.graph_core.graph import Graph, VertexSet, is_forest_mask
from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import CertificateError


METHOD_ORACLE = 'oracle'
METHOD_BRANCH_REDUCE = 'branch_reduce'
METHOD_CONSTRUCTION = 'construction'

OPTIMALITY_PROVEN = 'proven'
OPTIMALITY_CROSS_CHECKED = 'cross_checked'
OPTIMALITY_UNKNOWN = 'unknown'


@dataclass(frozen=True)
class SolverBudget:
    node_limit: int
    time_limit: float

    def __post_init__(self):
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError('Solver budgets must be positive, got {!r}'.format(self))

    @classmethod
    def default(cls) -> 'SolverBudget':
        try:
            return cls(decycle_settings.SOLVER_NODE_LIMIT, decycle_settings.SOLVER_TIME_LIMIT)
        except ValueError as e:
            raise ImproperlyConfigured(
                'DECYCLE_SOLVER_NODE_LIMIT and DECYCLE_SOLVER_TIME_LIMIT must be positive: {}'
                .format(e)
            )


@dataclass(frozen=True)
class DecyclingCertificate:
    graph: Graph = field(repr=False)
    vertices: VertexSet
    value: int
    method: str
    optimality: str
    nodes: int = 0
    wall_time: float = 0.0
    construction: Optional[str] = None

    def __post_init__(self):
        if self.vertices.n != self.graph.n:
            raise CertificateError('Certificate universe {} does not match the graph order {}'
                                   .format(self.vertices.n, self.graph.n))
        if len(self.vertices) != self.value:
            raise CertificateError('Certificate lists {} vertices but claims value {}'
                                   .format(len(self.vertices), self.value))
        if not is_forest_mask(self.graph.adj, self.vertices.complement().bits):
            raise CertificateError('The complement of {!r} still contains a cycle'
                                   .format(self.vertices))

    @property
    def forest_number(self) -> int:
        return self.graph.n - self.value

    def as_dict(self, identity: Optional[Dict] = None) -> Dict:
        """ Returns the JSON-serializable form of the certificate. """
        data = {
            'graph': identity or {'graph6': encode_graph6(self.graph)},
            'order': self.graph.n,
            'value': self.value,
            'forest_number': self.forest_number,
            'vertices': self.vertices.as_list(),
            'method': self.method,
            'optimality': self.optimality,
            'nodes': self.nodes,
            'wall_time': round(self.wall_time, 6),
        }
        if self.construction is not None:
            data['construction'] = self.construction
        return data
