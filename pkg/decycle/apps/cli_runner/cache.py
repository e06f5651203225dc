"""
    Result cache
    ============

    This module stores exact solver results between runs. The cache file is line-based UTF-8 text
    with one tab-separated entry per line::

        <key>\t<value>\t<comma-separated certificate vertices>\t<nodes>,<wall time>

    Keys are the instance keys of ``decycle.apps.theorem_suites.context``. Every loaded certificate
    is validated against the graph its key stands for; lines that fail are skipped with a warning. A
    few entries are also re-solved on load and must give the cached value.

"""

import logging
import os
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

from decycle.apps.fvs_solver.certificates import (
    METHOD_BRANCH_REDUCE, OPTIMALITY_PROVEN, DecyclingCertificate, SolverBudget
)
from decycle.apps.fvs_solver.solver import decycling_number
from decycle.apps.graph_core.graph import VertexSet
from decycle.apps.theorem_suites.context import instance_graph
from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import CacheError, DecycleError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CacheEntry:
    key: str
    value: int
    certificate: Tuple[int, ...]
    nodes: int = 0
    wall_time: float = 0.0

    @classmethod
    def from_certificate(cls, key: str, certificate: DecyclingCertificate) -> 'CacheEntry':
        return cls(
            key=key,
            value=certificate.value,
            certificate=tuple(certificate.vertices.as_list()),
            nodes=certificate.nodes,
            wall_time=round(certificate.wall_time, 6),
        )

    @classmethod
    def parse(cls, line: str) -> 'CacheEntry':
        fields = line.rstrip('\n').split('\t')
        if len(fields) != 4:
            raise ValueError('expected 4 tab-separated fields, got {}'.format(len(fields)))
        key, value, certificate, stats = fields
        vertices = tuple(int(v) for v in certificate.split(',')) if certificate else ()
        nodes, wall_time = stats.split(',')
        entry = cls(key, int(value), vertices, int(nodes), float(wall_time))
        if len(entry.certificate) != entry.value:
            raise ValueError('certificate lists {} vertices for value {}'.format(
                len(entry.certificate), entry.value))
        return entry

    def serialize(self) -> str:
        return '\t'.join((
            self.key,
            str(self.value),
            ','.join(str(v) for v in self.certificate),
            '{},{}'.format(self.nodes, self.wall_time),
        ))

    def to_certificate(self) -> DecyclingCertificate:
        """ Rebuilds the certificate on the graph the key stands for; this validates it. """
        g = instance_graph(self.key)
        return DecyclingCertificate(
            graph=g,
            vertices=VertexSet.from_iterable(g.n, self.certificate),
            value=self.value,
            method=METHOD_BRANCH_REDUCE,
            optimality=OPTIMALITY_PROVEN,
            nodes=self.nodes,
            wall_time=self.wall_time,
        )


class ResultCache:
    """ The in-memory view of a cache file. """

    def __init__(self, path: Optional[str] = None):
        self.path = path
        self.entries: Dict[str, CacheEntry] = {}
        self.skipped = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def get(self, key: str) -> Optional[CacheEntry]:
        return self.entries.get(key)

    def snapshot(self) -> Dict[str, CacheEntry]:
        return dict(self.entries)

    def load(self, spot_checks: Optional[int] = None, budget: Optional[SolverBudget] = None):
        """ Merges the entries of the cache file; a missing file is an empty cache. """
        if not self.path or not os.path.exists(self.path):
            return self
        try:
            with open(self.path, encoding='utf-8') as f:
                lines = f.readlines()
        except (OSError, UnicodeDecodeError) as e:
            raise CacheError('Cannot read the cache file {}: {}'.format(self.path, e))

        skipped = 0
        for number, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                entry = CacheEntry.parse(line)
                entry.to_certificate()
            except (ValueError, DecycleError) as e:
                skipped += 1
                logger.warning('Skipping corrupted cache line %d of %s: %s', number, self.path, e)
                continue
            self.entries[entry.key] = entry
        self.skipped += skipped
        if skipped:
            logger.warning('Skipped %d corrupted line(s) in %s', skipped, self.path)

        spot_checks = decycle_settings.CACHE_SPOT_CHECKS if spot_checks is None else spot_checks
        self.spot_check(spot_checks, budget)
        return self

    def spot_check(self, count: int, budget: Optional[SolverBudget] = None) -> None:
        for key in sorted(self.entries)[:max(count, 0)]:
            entry = self.entries[key]
            value = decycling_number(instance_graph(key), budget).value
            if value != entry.value:
                raise CacheError('Cache entry {!r} claims {} but the solver finds {}'.format(
                    key, entry.value, value))
            logger.debug('Spot check of %s passed', key)

    def merge(self, certificates: Mapping[str, DecyclingCertificate]) -> int:
        """ Adds solved instances; returns how many keys were new. """
        added = 0
        for key, certificate in certificates.items():
            if key not in self.entries:
                added += 1
            self.entries[key] = CacheEntry.from_certificate(key, certificate)
        return added

    def store(self) -> None:
        if not self.path:
            return
        directory = os.path.dirname(os.path.abspath(self.path))
        os.makedirs(directory, exist_ok=True)
        temporary = self.path + '.tmp'
        try:
            with open(temporary, 'w', encoding='utf-8') as f:
                for key in sorted(self.entries):
                    f.write(self.entries[key].serialize() + '\n')
            os.replace(temporary, self.path)
        except OSError as e:
            raise CacheError('Cannot write the cache file {}: {}'.format(self.path, e))
        logger.info('Stored %d cache entries in %s', len(self.entries), self.path)


def cache_load(path: str, spot_checks: Optional[int] = None) -> ResultCache:
    return ResultCache(path).load(spot_checks)


def cache_store(cache: ResultCache, path: Optional[str] = None) -> None:
    if path is not None:
        cache.path = path
    cache.store()
