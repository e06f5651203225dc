"""
    Decycling oracle
    ================

    This module provides the brute-force decycling oracle used to cross-check the exact solver. It
    tries vertex subsets by increasing size and, within a size, in lexicographic order; the first
    subset whose complement is a forest is returned.

"""

import itertools
import time
from typing import Optional

from decycle.apps.graph_core.graph import Graph, VertexSet, bits_of, is_forest_mask
from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import GraphSizeError

from .certificates import METHOD_ORACLE, OPTIMALITY_PROVEN, DecyclingCertificate


def decycling_oracle(g: Graph, cap: Optional[int] = None) -> DecyclingCertificate:
    cap = cap if cap is not None else decycle_settings.ORACLE_MAX_ORDER
    if g.n > cap:
        raise GraphSizeError('The oracle is limited to {} vertices, got {}'.format(cap, g.n))
    started = time.perf_counter()
    full = (1 << g.n) - 1
    tried = 0
    for size in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            tried += 1
            removed = bits_of(subset)
            if is_forest_mask(g.adj, full & ~removed):
                return DecyclingCertificate(
                    graph=g,
                    vertices=VertexSet(g.n, removed),
                    value=size,
                    method=METHOD_ORACLE,
                    optimality=OPTIMALITY_PROVEN,
                    nodes=tried,
                    wall_time=time.perf_counter() - started,
                )
    # The empty graph is a forest, so the loop always returns.
    raise AssertionError('unreachable')
