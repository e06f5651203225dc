"""
    Django-decycle settings
    =======================

    This module define the settings of the django-decycle laboratory. Each setting can be overriden
    in the Django project's settings. These settings allow to customize many aspects of the
    laboratory, such as size caps, solver budgets, caching, sweeps and reports.

"""

import os

from django.conf import settings

from decycle import DECYCLE_DEFAULT_REPORT_DIR


# Graphs
MAX_ORDER = getattr(settings, 'DECYCLE_MAX_ORDER', 64)
TREE_MAX_ORDER = getattr(settings, 'DECYCLE_TREE_MAX_ORDER', 12)

# Above this order trees are generated by leaf extension instead of Prüfer sequences.
PRUFER_MAX_ORDER = getattr(settings, 'DECYCLE_PRUFER_MAX_ORDER', 7)


# Matchings
MATCHING_MAX_ORDER = getattr(settings, 'DECYCLE_MATCHING_MAX_ORDER', 22)


# Solver
ORACLE_MAX_ORDER = getattr(settings, 'DECYCLE_ORACLE_MAX_ORDER', 20)
SOLVER_NODE_LIMIT = getattr(settings, 'DECYCLE_SOLVER_NODE_LIMIT', 2000000)
SOLVER_TIME_LIMIT = getattr(settings, 'DECYCLE_SOLVER_TIME_LIMIT', 600)


# Cache
CACHE_PATH = getattr(settings, 'DECYCLE_CACHE_PATH', os.environ.get('DECYCLE_CACHE') or None)
CACHE_SPOT_CHECKS = getattr(settings, 'DECYCLE_CACHE_SPOT_CHECKS', 2)


# Sweeps
WORKERS = getattr(settings, 'DECYCLE_WORKERS', 1)
RANDOM_SEED = getattr(settings, 'DECYCLE_RANDOM_SEED', 20250917)
STAR_FORMULA_MAX_STAR = getattr(settings, 'DECYCLE_STAR_FORMULA_MAX_STAR', 8)
MATCHING_BOUND_PAIRS = getattr(settings, 'DECYCLE_MATCHING_BOUND_PAIRS', 100)
MATCHING_BOUND_MAX_PRODUCT_ORDER = getattr(
    settings, 'DECYCLE_MATCHING_BOUND_MAX_PRODUCT_ORDER', 30
)
ORACLE_RANDOM_GRAPHS = getattr(settings, 'DECYCLE_ORACLE_RANDOM_GRAPHS', 50)
ORACLE_CROSS_CHECK_MAX_ORDER = getattr(settings, 'DECYCLE_ORACLE_CROSS_CHECK_MAX_ORDER', 14)

DEFAULT_SWEEP_N_MAX = {
    'thm-main': 5,
    'star-formula': 5,
    'equality': 5,
    'small-star': 7,
    'prism': 10,
    'matching-bound': 7,
    'torus': 5,
    'grid': 5,
    'oracle': 5,
    'conjecture': 5,
}
DEFAULT_SWEEP_N_MAX.update(getattr(settings, 'DECYCLE_DEFAULT_SWEEP_N_MAX', {}))


# Reports
REPORT_DIR = getattr(settings, 'DECYCLE_REPORT_DIR', DECYCLE_DEFAULT_REPORT_DIR)
