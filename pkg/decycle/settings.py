"""
    Standalone settings
    ===================

    This module provides the Django settings used by the ``decycle`` console script when no host
    project is configured. Set ``DJANGO_SETTINGS_MODULE`` to use another settings module instead.

"""

import os


SECRET_KEY = os.environ.get('DECYCLE_SECRET_KEY', 'decycle-standalone')

DEBUG = False

USE_TZ = True

DATABASES = {}

INSTALLED_APPS = (
    'decycle.apps.graph_core',
    'decycle.apps.tree_enum',
    'decycle.apps.product',
    'decycle.apps.matching_cover',
    'decycle.apps.fvs_solver',
    'decycle.apps.constructions',
    'decycle.apps.theorem_suites',
    'decycle.apps.cli_runner',
)

DECYCLE_CACHE_PATH = os.environ.get('DECYCLE_CACHE') or None

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'decycle': {
            'handlers': ['console'],
            'level': os.environ.get('DECYCLE_LOG_LEVEL', 'WARNING'),
        },
    },
}
