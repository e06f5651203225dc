import random

import factory
from faker import Faker

from decycle.apps.graph_core.graph import Graph
from decycle.apps.tree_enum.enumeration import prufer_to_edges


faker = Faker()

__all__ = ['RandomTreeFactory', 'build_tree', 'build_caterpillar']


def _tree_from_seed(n, seed):
    rng = random.Random(seed)
    if n == 1:
        return Graph(1, [0])
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_edges(n, prufer_to_edges(sequence, n))


class RandomTreeFactory(factory.Factory):
    """ Builds a labelled tree from a random Prüfer sequence; the seed makes it reproducible. """

    n = factory.LazyAttribute(lambda obj: faker.random_int(min=2, max=8))
    seed = factory.LazyAttribute(lambda obj: faker.random_int(min=0, max=10 ** 6))

    class Meta:
        model = Graph

    @classmethod
    def _build(cls, model_class, n, seed):
        return _tree_from_seed(n, seed)

    @classmethod
    def _create(cls, model_class, n, seed):
        return _tree_from_seed(n, seed)


def build_tree(**attrs):
    """Build a new random tree."""
    return RandomTreeFactory.build(**attrs)


def build_caterpillar(spine, legs):
    """Build a path of ``spine`` vertices with ``legs`` leaves hanging from each spine vertex."""
    edges = [(i, i + 1) for i in range(spine - 1)]
    n = spine
    for i in range(spine):
        for _ in range(legs):
            edges.append((i, n))
            n += 1
    return Graph.from_edges(n, edges)
