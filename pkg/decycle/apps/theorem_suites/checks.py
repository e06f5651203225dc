"""
    Theorem checks
    ==============

    This module turns each claim about decycling numbers of products into a check over one instance.
    A check computes the exact decycling number through a ``SolveContext``, gathers the values the
    claim is decided on and returns a ``CheckRecord``.

    Known lower bounds are injected into the solver to speed it up, except where the claim under
    check is that lower bound itself (the matching bound and the prism theorem).

"""

import logging
import time
from typing import Any, Dict, List, Optional

from decycle.apps.constructions.constructions import (
    disjoint_c4_family, prism_cover_set, star_layer_set
)
from decycle.apps.fvs_solver.oracle import decycling_oracle
from decycle.apps.graph_core.constructors import make_path, make_star
from decycle.apps.graph_core.graph import Graph
from decycle.apps.matching_cover.matching import matching_number, tree_matching_number
from decycle.apps.tree_enum.codes import has_induced_p4, is_star, tree_from_code
from decycle.apps.tree_enum.enumeration import tree_code_pairs
from decycle.core.exceptions import ClaimPreconditionError

from .claims import VERDICT_FAIL, equality_predicate, get_claim, grid_lower_bound, torus_formula
from .context import SolveContext, cycle_descriptor, graph6_descriptor, tree_descriptor
from .records import CheckRecord


logger = logging.getLogger(__name__)

PRISM_TYPO_NOTE = (
    'The last inequality of the prism argument reads ∇(T□P_1) ≤ |W|; P_1 is read as P_2, the '
    'prism the argument is about.'
)

CONJECTURE_MAX_ORDER = 6


def _record(
    claim_id: str, instance: Dict[str, Any], computed: Dict[str, Any], started: float,
    notes: Optional[List[str]] = None, certificates: Optional[Dict[str, Dict]] = None,
) -> CheckRecord:
    claim = get_claim(claim_id)
    record = CheckRecord(
        claim_id=claim_id,
        instance=instance,
        expected=claim.relation,
        computed=computed,
        verdict=claim.verdict(computed),
        wall_time=time.perf_counter() - started,
        notes=notes or [],
        certificates=certificates or {},
    )
    if record.verdict == VERDICT_FAIL:
        logger.error('%s fails on %s: %s', claim_id, record.instance_key, computed)
    else:
        logger.debug('%s %s on %s', claim_id, record.verdict, record.instance_key)
    return record


def _ordered(t: Graph, t2: Graph):
    if t.n > t2.n:
        return t2, t
    return t, t2


def _tree_floor(t: Graph, t2: Graph) -> int:
    return tree_matching_number(t) * tree_matching_number(t2)


def check_main_theorem(t: Graph, t2: Graph, context: Optional[SolveContext] = None) -> CheckRecord:
    """ Checks ``∇(T□T') >= n - 1``, tight when the larger factor is a star. """
    context = context or SolveContext()
    started = time.perf_counter()
    t, t2 = _ordered(t, t2)
    n, n2 = t.n, t2.n
    key, certificate = context.solve_product(
        tree_descriptor(t), tree_descriptor(t2), floor=_tree_floor(t, t2))
    nabla = certificate.value
    computed = {
        'n': n,
        'n2': n2,
        'nabla': nabla,
        'star_case': is_star(t2) or (n == n2 and is_star(t)),
        'f': n * n2 - nabla,
        'f_star_product': n * n2 - n + 1,
    }
    return _record(
        'thm-main', {'key': key}, computed, started,
        certificates={'solver': certificate.as_dict({'key': key})},
    )


def check_star_formula(
    t: Graph, n_star: int, context: Optional[SolveContext] = None,
) -> CheckRecord:
    if not 2 <= t.n <= n_star:
        raise ClaimPreconditionError(
            'The star formula needs 2 <= n <= n_star, got n={} and n_star={}'.format(t.n, n_star))
    context = context or SolveContext()
    started = time.perf_counter()
    key, certificate = context.solve_product(
        tree_descriptor(t), tree_descriptor(make_star(n_star)), floor=tree_matching_number(t))
    construction = star_layer_set(t, n_star)
    nabla = certificate.value
    computed = {
        'n': t.n,
        'n_star': n_star,
        'nabla': nabla,
        'f': t.n * n_star - nabla,
        'f_expected': t.n * n_star - t.n + 1,
        'construction_value': construction.value,
    }
    return _record(
        'star-formula', {'key': key, 'n_star': n_star}, computed, started,
        certificates={
            'solver': certificate.as_dict({'key': key}),
            'construction': construction.as_dict(),
        },
    )


def equality_lemma(n: int, n2: int) -> str:
    """ Names the case of the equality characterization that covers orders ``n <= n2``. """
    if n < n2:
        return 'unequal-orders'
    if n <= 3:
        return 'small-orders'
    return 'equal-orders'


def check_equality_characterization(
    t: Graph, t2: Graph, context: Optional[SolveContext] = None,
) -> CheckRecord:
    t, t2 = _ordered(t, t2)
    n, n2 = t.n, t2.n
    if n < 2:
        raise ClaimPreconditionError('The equality characterization needs trees of order >= 2')
    context = context or SolveContext()
    started = time.perf_counter()
    key, certificate = context.solve_product(
        tree_descriptor(t), tree_descriptor(t2), floor=_tree_floor(t, t2))
    nabla = certificate.value
    first_is_star, second_is_star = is_star(t), is_star(t2)
    lemma = equality_lemma(n, n2)
    computed = {
        'n': n,
        'n2': n2,
        'nabla': nabla,
        'first_is_star': first_is_star,
        'second_is_star': second_is_star,
        'tight': equality_predicate(n, n2, first_is_star, second_is_star),
        'f': n * n2 - nabla,
        'f_max': n * n2 - n + 1,
    }
    notes = ['lemma={}'.format(lemma)]
    if lemma != 'small-orders':
        notes.append('induced P4 in first={}, second={}'.format(
            has_induced_p4(t), has_induced_p4(t2)))
    logger.info('equality %s: %s', key, '; '.join(notes))
    return _record(
        'equality', {'key': key, 'lemma': lemma}, computed, started, notes=notes,
        certificates={'solver': certificate.as_dict({'key': key})},
    )


def _small_star(claim_id: str, t: Graph, n_star: int, context: SolveContext) -> CheckRecord:
    if not 2 <= n_star < t.n:
        raise ClaimPreconditionError(
            'The small-star range needs 2 <= n_star < n, got n={} and n_star={}'.format(
                t.n, n_star))
    if is_star(t):
        raise ClaimPreconditionError('The small-star range needs a tree that is not a star')
    started = time.perf_counter()
    key, certificate = context.solve_product(
        tree_descriptor(t), tree_descriptor(make_star(n_star)), floor=tree_matching_number(t))
    construction = star_layer_set(t, n_star)
    computed = {
        'n': t.n,
        'n_star': n_star,
        'nabla': certificate.value,
        'f': t.n * n_star - certificate.value,
        'construction_value': construction.value,
    }
    return _record(
        claim_id, {'key': key, 'n_star': n_star}, computed, started,
        certificates={
            'solver': certificate.as_dict({'key': key}),
            'construction': construction.as_dict(),
        },
    )


def check_small_star_range(
    t: Graph, n_star: int, context: Optional[SolveContext] = None,
) -> CheckRecord:
    """ Checks ``n_star <= ∇(T□S_n_star) <= n - 1`` and records the exact value. """
    return _small_star('small-star', t, n_star, context or SolveContext())


def check_star_corollary(t: Graph, context: Optional[SolveContext] = None) -> CheckRecord:
    """ Checks ``∇(S_n□T) = n`` and ``f(S_n□T) = n²`` for a non-star tree of order n + 1. """
    return _small_star('star-corollary', t, t.n - 1, context or SolveContext())


def check_prism(t: Graph, context: Optional[SolveContext] = None) -> CheckRecord:
    context = context or SolveContext()
    started = time.perf_counter()
    key, certificate = context.solve_product(tree_descriptor(t), tree_descriptor(make_path(2)))
    construction = prism_cover_set(t)
    computed = {
        'n': t.n,
        'nabla': certificate.value,
        'matching_number': tree_matching_number(t),
        'construction_value': construction.value,
    }
    return _record(
        'prism', {'key': key}, computed, started, notes=[PRISM_TYPO_NOTE],
        certificates={
            'solver': certificate.as_dict({'key': key}),
            'construction': construction.as_dict(),
        },
    )


def check_matching_bound(
    g1: Graph, g2: Graph, context: Optional[SolveContext] = None,
) -> CheckRecord:
    context = context or SolveContext()
    started = time.perf_counter()
    key, certificate = context.solve_product(graph6_descriptor(g1), graph6_descriptor(g2))
    computed = {
        'order': g1.n * g2.n,
        'nabla': certificate.value,
        'matching_number_1': matching_number(g1),
        'matching_number_2': matching_number(g2),
        'disjoint_c4': len(disjoint_c4_family(g1, g2)),
    }
    return _record(
        'matching-bound', {'key': key}, computed, started,
        certificates={'solver': certificate.as_dict({'key': key})},
    )


def check_torus_formula(n: int, n2: int, context: Optional[SolveContext] = None) -> CheckRecord:
    n, n2 = sorted((n, n2))
    if n < 3:
        raise ClaimPreconditionError('Cycles need at least three vertices, got {}'.format(n))
    context = context or SolveContext()
    started = time.perf_counter()
    key, certificate = context.solve_product(
        cycle_descriptor(n), cycle_descriptor(n2), floor=(n // 2) * (n2 // 2))
    computed = {
        'n': n,
        'n2': n2,
        'nabla': certificate.value,
        'formula': torus_formula(n, n2),
    }
    return _record(
        'torus-formula', {'key': key}, computed, started,
        certificates={'solver': certificate.as_dict({'key': key})},
    )


def check_grid_bounds(n: int, n2: int, context: Optional[SolveContext] = None) -> CheckRecord:
    """ Checks ``L <= ∇(P_n□P_n2) <= L + 1`` and records the weaker ``L + 2`` upper bound. """
    n, n2 = sorted((n, n2))
    if n < 2:
        raise ClaimPreconditionError('The grid bounds need paths of order >= 2, got {}'.format(n))
    context = context or SolveContext()
    started = time.perf_counter()
    key, certificate = context.solve_product(
        tree_descriptor(make_path(n)), tree_descriptor(make_path(n2)), floor=(n // 2) * (n2 // 2))
    lower = grid_lower_bound(n, n2)
    computed = {
        'n': n,
        'n2': n2,
        'nabla': certificate.value,
        'lower': lower,
        'upper': lower + 1,
        'weak_upper': lower + 2,
        'within_weak_upper': certificate.value <= lower + 2,
    }
    return _record(
        'grid-bounds', {'key': key}, computed, started,
        certificates={'solver': certificate.as_dict({'key': key})},
    )


def check_oracle_agreement(
    g: Graph, key: Optional[str] = None, context: Optional[SolveContext] = None,
) -> CheckRecord:
    """ Compares the branch-and-reduce value of ``g`` with the subset oracle's.

    ``key`` names the instance when ``g`` is a product built from known factors; the graph must be
    the one the key stands for.

    """
    context = context or SolveContext()
    started = time.perf_counter()
    key = key or graph6_descriptor(g)
    certificate = context.solve(key)
    oracle = decycling_oracle(g)
    computed = {
        'order': g.n,
        'solver': certificate.value,
        'oracle': oracle.value,
    }
    return _record(
        'oracle-agreement', {'key': key}, computed, started,
        certificates={
            'solver': certificate.as_dict({'key': key}),
            'oracle': oracle.as_dict({'key': key}),
        },
    )


def check_conjecture_pair(
    t: Graph, t2: Graph, context: Optional[SolveContext] = None,
) -> CheckRecord:
    """ Compares ``f(P_n□P_n')`` with ``f(T□T')``; the result is only reported. """
    context = context or SolveContext()
    started = time.perf_counter()
    t, t2 = _ordered(t, t2)
    n, n2 = t.n, t2.n
    path, path2 = make_path(n), make_path(n2)
    _, path_certificate = context.solve_product(
        tree_descriptor(path), tree_descriptor(path2), floor=_tree_floor(path, path2))
    key, certificate = context.solve_product(
        tree_descriptor(t), tree_descriptor(t2), floor=_tree_floor(t, t2))
    f_path = n * n2 - path_certificate.value
    f = n * n2 - certificate.value
    computed = {
        'n': n,
        'n2': n2,
        'f_path': f_path,
        'f': f,
        'violation': f_path > f,
    }
    notes = []
    if computed['violation']:
        notes.append('FINDING: f(P_{}□P_{}) = {} exceeds f = {}'.format(n, n2, f_path, f))
        logger.warning(
            'Finding on %s: f(P_%d□P_%d) = %d > f(T□T\') = %d', key, n, n2, f_path, f)
    return _record(
        'open-conjecture', {'key': key}, computed, started, notes=notes,
        certificates={'solver': certificate.as_dict({'key': key})},
    )


def scan_open_conjecture(n_max: int, context: Optional[SolveContext] = None) -> List[CheckRecord]:
    if n_max > CONJECTURE_MAX_ORDER:
        raise ClaimPreconditionError(
            'The conjecture scan is limited to orders <= {}, got {}'.format(
                CONJECTURE_MAX_ORDER, n_max))
    context = context or SolveContext()
    return [
        check_conjecture_pair(tree_from_code(c1), tree_from_code(c2), context)
        for c1, c2 in tree_code_pairs(2, n_max)
    ]
