"""
    Solve context
    =============

    This module defines the instance keys used across suites and caches, and ``SolveContext``, which
    answers decycling queries for a sweep. A context is seeded with already known solutions (from
    the cache file), only runs the solver on keys it does not know, and remembers what it solved.

    An instance key is either a single factor descriptor or two descriptors joined by ``' x '``:

    * a tree code such as ``(()())`` stands for the tree rebuilt from the code;
    * ``C5`` stands for the cycle ``C_5``;
    * ``g6:<graph6>`` stands for the decoded graph.

    Products are keyed with the factor of smaller order first (ties broken by descriptor), and the
    product is always built in that order, so cached certificates are valid vertex lists.

"""

import logging
import re
from typing import Dict, Mapping, Optional, Tuple

from decycle.apps.fvs_solver.certificates import (
    METHOD_BRANCH_REDUCE, OPTIMALITY_PROVEN, DecyclingCertificate, SolverBudget
)
from decycle.apps.fvs_solver.solver import decycling_number
from decycle.apps.graph_core.constructors import make_cycle
from decycle.apps.graph_core.formats import decode_graph6, encode_graph6
from decycle.apps.graph_core.graph import Graph, VertexSet
from decycle.apps.product.product import cartesian_product
from decycle.apps.tree_enum.codes import canonical_code, tree_from_code
from decycle.core.exceptions import GraphFormatError


logger = logging.getLogger(__name__)

PRODUCT_SEPARATOR = ' x '
GRAPH6_PREFIX = 'g6:'

_cycle_re = re.compile(r'^C(\d+)$')


def tree_descriptor(t: Graph) -> str:
    return str(canonical_code(t))


def cycle_descriptor(n: int) -> str:
    return 'C{}'.format(n)


def graph6_descriptor(g: Graph) -> str:
    return GRAPH6_PREFIX + encode_graph6(g)


def factor_graph(descriptor: str) -> Graph:
    if descriptor.startswith(GRAPH6_PREFIX):
        return decode_graph6(descriptor[len(GRAPH6_PREFIX):])
    match = _cycle_re.match(descriptor)
    if match:
        return make_cycle(int(match.group(1)))
    if descriptor.startswith('('):
        return tree_from_code(descriptor.encode('ascii'))
    raise GraphFormatError('Unknown factor descriptor {!r}'.format(descriptor))


def descriptor_order(descriptor: str) -> int:
    if descriptor.startswith('('):
        return descriptor.count('(')
    match = _cycle_re.match(descriptor)
    if match:
        return int(match.group(1))
    return factor_graph(descriptor).n


def product_key(d1: str, d2: str) -> str:
    first, second = sorted((d1, d2), key=lambda d: (descriptor_order(d), d))
    return first + PRODUCT_SEPARATOR + second


def split_key(key: str) -> Tuple[str, ...]:
    return tuple(key.split(PRODUCT_SEPARATOR))


def instance_graph(key: str) -> Graph:
    """ Rebuilds the graph an instance key stands for. """
    parts = split_key(key)
    if len(parts) == 1:
        return factor_graph(parts[0])
    if len(parts) == 2:
        return cartesian_product(factor_graph(parts[0]), factor_graph(parts[1]))
    raise GraphFormatError('Malformed instance key {!r}'.format(key))


class SolveContext:
    """ Answers decycling queries by instance key, reusing known solutions. """

    def __init__(
        self, budget: Optional[SolverBudget] = None, known: Optional[Mapping] = None,
        cross_check: bool = False,
    ):
        self.budget = budget
        self.known = dict(known or {})
        self.cross_check = cross_check
        self.solved: Dict[str, DecyclingCertificate] = {}
        self.invocations = 0

    def solve(self, key: str, floor: int = 0) -> DecyclingCertificate:
        if key in self.solved:
            return self.solved[key]
        g = instance_graph(key)
        entry = self.known.get(key)
        if entry is not None:
            # Rebuilding the certificate re-validates the cached vertex list.
            return DecyclingCertificate(
                graph=g,
                vertices=VertexSet.from_iterable(g.n, entry.certificate),
                value=entry.value,
                method=METHOD_BRANCH_REDUCE,
                optimality=OPTIMALITY_PROVEN,
                nodes=entry.nodes,
                wall_time=entry.wall_time,
            )
        self.invocations += 1
        logger.debug('Solving %s', key)
        certificate = decycling_number(g, self.budget, floor=floor, cross_check=self.cross_check)
        self.solved[key] = certificate
        return certificate

    def solve_product(self, d1: str, d2: str, floor: int = 0) -> Tuple[str, DecyclingCertificate]:
        key = product_key(d1, d2)
        return key, self.solve(key, floor)
