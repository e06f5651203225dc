"""
    Django-decycle
    ==============

    Django-decycle is an exact decycling-number (feedback vertex set) laboratory for Cartesian
    products of trees and small graphs. It enumerates trees, builds products, computes exact
    decycling and forest numbers, emits explicit decycling sets as verifiable certificates and
    turns the known results about these products into executable checks.

"""

import os


# Directory used for CSV / JSON reports when no other location is configured.
DECYCLE_DEFAULT_REPORT_DIR = os.path.join(os.getcwd(), 'reports')
