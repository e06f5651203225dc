"""
    Sweeps
    ======

    This module lists the instances of every suite. A suite turns a maximum order ``n_max`` and a
    random seed into a list of ``SweepInstance`` objects; each instance names a check and carries
    its arguments, so that it can be shipped to a worker process and run there with
    ``run_instance``.

"""

import logging
import random
from typing import Callable, Dict, List, NamedTuple, Tuple

from decycle.apps.graph_core.constructors import make_path
from decycle.apps.graph_core.graph import Graph
from decycle.apps.tree_enum.codes import is_star, tree_from_code
from decycle.apps.tree_enum.enumeration import enumerate_trees, prufer_to_edges, tree_code_pairs
from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import ClaimPreconditionError, UnknownSuiteError

from . import checks
from .context import SolveContext, cycle_descriptor, instance_graph, product_key, tree_descriptor
from .records import CheckRecord


logger = logging.getLogger(__name__)


class SweepInstance(NamedTuple):
    check: str
    args: Tuple

    @property
    def label(self) -> str:
        return '{}{}'.format(self.check, self.args)


CHECKS: Dict[str, Callable[..., CheckRecord]] = {
    'main_theorem': checks.check_main_theorem,
    'star_formula': checks.check_star_formula,
    'equality': checks.check_equality_characterization,
    'small_star': checks.check_small_star_range,
    'star_corollary': checks.check_star_corollary,
    'prism': checks.check_prism,
    'matching_bound': checks.check_matching_bound,
    'torus': checks.check_torus_formula,
    'grid': checks.check_grid_bounds,
    'oracle': checks.check_oracle_agreement,
    'conjecture': checks.check_conjecture_pair,
}


def run_instance(instance: SweepInstance, context: SolveContext) -> CheckRecord:
    return CHECKS[instance.check](*instance.args, context=context)


def random_connected_graph(rng: random.Random, n: int, extra_edges: int) -> Graph:
    """ Returns a random spanning tree of order ``n`` plus up to ``extra_edges`` random chords. """
    sequence = [rng.randrange(n) for _ in range(max(n - 2, 0))]
    edges = set(prufer_to_edges(sequence, n)) if n > 1 else set()
    edges = {(min(u, v), max(u, v)) for u, v in edges}
    chords = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(chords)
    edges.update(chords[:extra_edges])
    return Graph.from_edges(n, sorted(edges))


def _tree_pairs(n_max: int):
    return [(tree_from_code(c1), tree_from_code(c2)) for c1, c2 in tree_code_pairs(2, n_max)]


def main_theorem_instances(n_max: int, seed: int) -> List[SweepInstance]:
    return [SweepInstance('main_theorem', pair) for pair in _tree_pairs(n_max)]


def equality_instances(n_max: int, seed: int) -> List[SweepInstance]:
    return [SweepInstance('equality', pair) for pair in _tree_pairs(n_max)]


def star_formula_instances(n_max: int, seed: int) -> List[SweepInstance]:
    star_max = max(n_max, decycle_settings.STAR_FORMULA_MAX_STAR)
    return [
        SweepInstance('star_formula', (t, n_star))
        for n in range(2, n_max + 1)
        for t in enumerate_trees(n)
        for n_star in range(n, star_max + 1)
    ]


def small_star_instances(n_max: int, seed: int) -> List[SweepInstance]:
    instances = []
    for n in range(4, n_max + 1):
        for t in enumerate_trees(n):
            if is_star(t):
                continue
            instances.extend(SweepInstance('small_star', (t, n_star)) for n_star in range(2, n))
            instances.append(SweepInstance('star_corollary', (t,)))
    return instances


def prism_instances(n_max: int, seed: int) -> List[SweepInstance]:
    return [
        SweepInstance('prism', (t,)) for n in range(2, n_max + 1) for t in enumerate_trees(n)
    ]


def matching_bound_instances(n_max: int, seed: int) -> List[SweepInstance]:
    """ Draws seeded random connected factor pairs whose product stays within reach. """
    rng = random.Random(seed)
    max_factor = min(n_max, 7)
    cap = decycle_settings.MATCHING_BOUND_MAX_PRODUCT_ORDER
    instances = []
    while len(instances) < decycle_settings.MATCHING_BOUND_PAIRS:
        n1, n2 = rng.randint(2, max_factor), rng.randint(2, max_factor)
        if n1 * n2 > cap:
            continue
        g1 = random_connected_graph(rng, n1, rng.randint(0, 2))
        g2 = random_connected_graph(rng, n2, rng.randint(0, 2))
        instances.append(SweepInstance('matching_bound', (g1, g2)))
    return instances


def torus_instances(n_max: int, seed: int) -> List[SweepInstance]:
    return [
        SweepInstance('torus', (n, n2))
        for n in range(3, n_max + 1) for n2 in range(n, n_max + 1)
    ]


def grid_instances(n_max: int, seed: int) -> List[SweepInstance]:
    pairs = [(n, n2) for n in range(2, n_max + 1) for n2 in range(n, n_max + 1)]
    pairs += [(2, n_max + 1), (3, n_max + 1)]
    return [SweepInstance('grid', pair) for pair in pairs]


def oracle_instances(n_max: int, seed: int) -> List[SweepInstance]:
    """ Lists the swept products small enough for the oracle, plus seeded random graphs. """
    cap = decycle_settings.ORACLE_CROSS_CHECK_MAX_ORDER
    keys = set()
    for t, t2 in _tree_pairs(n_max):
        if t.n * t2.n <= cap:
            keys.add(product_key(tree_descriptor(t), tree_descriptor(t2)))
    edge = tree_descriptor(make_path(2))
    for n in range(2, cap // 2 + 1):
        for t in enumerate_trees(n):
            keys.add(product_key(tree_descriptor(t), edge))
    for n in range(3, n_max + 1):
        for n2 in range(n, n_max + 1):
            if n * n2 <= cap:
                keys.add(product_key(cycle_descriptor(n), cycle_descriptor(n2)))
    instances = [SweepInstance('oracle', (instance_graph(key), key)) for key in sorted(keys)]

    rng = random.Random(seed)
    for _ in range(decycle_settings.ORACLE_RANDOM_GRAPHS):
        n = rng.randint(15, 18)
        instances.append(SweepInstance('oracle', (random_connected_graph(rng, n, n // 3),)))
    return instances


def conjecture_instances(n_max: int, seed: int) -> List[SweepInstance]:
    if n_max > checks.CONJECTURE_MAX_ORDER:
        raise ClaimPreconditionError(
            'The conjecture scan is limited to orders <= {}, got {}'.format(
                checks.CONJECTURE_MAX_ORDER, n_max))
    return [SweepInstance('conjecture', pair) for pair in _tree_pairs(n_max)]


SUITES: Dict[str, Callable[[int, int], List[SweepInstance]]] = {
    'thm-main': main_theorem_instances,
    'star-formula': star_formula_instances,
    'equality': equality_instances,
    'small-star': small_star_instances,
    'prism': prism_instances,
    'matching-bound': matching_bound_instances,
    'torus': torus_instances,
    'grid': grid_instances,
    'oracle': oracle_instances,
    'conjecture': conjecture_instances,
}


def get_suite(name: str) -> Callable[[int, int], List[SweepInstance]]:
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuiteError('Unknown suite {!r}; known suites: {}'.format(
            name, ', '.join(sorted(SUITES))))


def suite_instances(name: str, n_max: int = None, seed: int = None) -> List[SweepInstance]:
    generator = get_suite(name)
    n_max = n_max if n_max is not None else decycle_settings.DEFAULT_SWEEP_N_MAX[name]
    seed = seed if seed is not None else decycle_settings.RANDOM_SEED
    instances = generator(n_max, seed)
    logger.info('Suite %s: %d instances (n_max=%d, seed=%d)', name, len(instances), n_max, seed)
    return instances
