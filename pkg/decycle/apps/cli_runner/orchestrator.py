"""
    Sweep orchestration
    ===================

    This module runs suites and single instances. The orchestrator owns the result cache: workers
    receive a snapshot of the known solutions, solve what is missing and send back their records
    along with the certificates they computed; only the orchestrator merges them into the cache and
    writes report files.

    With one worker every instance runs in the current process. With more, a process pool is used;
    each worker process sets Django up once and keeps its own ``SolveContext`` across instances.

"""

import logging
import os
import time
from concurrent.futures import FIRST_EXCEPTION, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import django

from decycle.apps.fvs_solver.certificates import DecyclingCertificate, SolverBudget
from decycle.apps.fvs_solver.solver import decycling_number
from decycle.apps.graph_core.formats import decode_graph6, encode_graph6, read_edge_list
from decycle.apps.graph_core.graph import Graph
from decycle.apps.theorem_suites.context import GRAPH6_PREFIX, SolveContext
from decycle.apps.theorem_suites.records import CheckRecord
from decycle.apps.theorem_suites.sweeps import SweepInstance, run_instance, suite_instances
from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import BudgetExhausted, GraphFormatError

from .cache import ResultCache
from .reports import FORMATS, banners, sorted_records, summarize, write_reports


logger = logging.getLogger(__name__)

# Suites that stop at their first failing record.
ABORT_ON_FAILURE = ('equality',)


@dataclass
class SweepResult:
    suite: str
    records: List[CheckRecord] = field(default_factory=list)
    report_paths: List[str] = field(default_factory=list)
    invocations: int = 0
    exhausted: Optional[BudgetExhausted] = None
    aborted_on: Optional[CheckRecord] = None

    @property
    def failures(self) -> List[CheckRecord]:
        return [record for record in self.records if record.failed]

    @property
    def findings(self) -> List[CheckRecord]:
        return [record for record in self.records if record.is_finding]

    @property
    def banners(self) -> List[str]:
        return banners(self.records)


# Per-process state of pool workers.
_worker_context: Optional[SolveContext] = None


def _init_worker(known: Dict, budget: Optional[SolverBudget]) -> None:
    global _worker_context
    django.setup()
    _worker_context = SolveContext(budget=budget, known=known)


def _run_in_worker(
    instance: SweepInstance,
) -> Tuple[CheckRecord, Dict[str, DecyclingCertificate], int]:
    return _run_with(_worker_context, instance)


def _run_with(context: SolveContext, instance: SweepInstance):
    before = set(context.solved)
    invocations = context.invocations
    record = run_instance(instance, context)
    solved = {key: cert for key, cert in context.solved.items() if key not in before}
    return record, solved, context.invocations - invocations


def _should_abort(suite: str, record: CheckRecord) -> bool:
    return suite in ABORT_ON_FAILURE and record.failed


def _run_sequential(suite, instances, context, result, cache):
    for instance in instances:
        record, solved, invocations = _run_with(context, instance)
        result.records.append(record)
        result.invocations += invocations
        cache.merge(solved)
        if _should_abort(suite, record):
            result.aborted_on = record
            return


def _run_parallel(suite, instances, budget, workers, result, cache):
    with ProcessPoolExecutor(
        max_workers=workers, initializer=_init_worker, initargs=(cache.snapshot(), budget),
    ) as executor:
        futures = [executor.submit(_run_in_worker, instance) for instance in instances]
        _, pending = wait(futures, return_when=FIRST_EXCEPTION)
        for future in pending:
            future.cancel()
        # Futures are read in submission order so that a rerun fails on the same instance.
        for future in futures:
            if future.cancelled() or not future.done():
                continue
            error = future.exception()
            if error is not None:
                raise error
            record, solved, invocations = future.result()
            result.records.append(record)
            result.invocations += invocations
            cache.merge(solved)
            if _should_abort(suite, record):
                result.aborted_on = record
                return


def run_sweep(
    suite: str,
    n_max: Optional[int] = None,
    budget: Optional[SolverBudget] = None,
    workers: Optional[int] = None,
    cache: Optional[ResultCache] = None,
    seed: Optional[int] = None,
    report_dir: Optional[str] = None,
    formats: Sequence[str] = FORMATS,
) -> SweepResult:
    """ Runs every instance of ``suite``, writes the reports and stores the cache.

    Budget exhaustion stops the sweep: the records obtained so far are still reported and the
    exception is attached to the result.

    """
    n_max = n_max if n_max is not None else decycle_settings.DEFAULT_SWEEP_N_MAX.get(suite)
    seed = seed if seed is not None else decycle_settings.RANDOM_SEED
    workers = workers or decycle_settings.WORKERS
    cache = cache if cache is not None else ResultCache(decycle_settings.CACHE_PATH).load()
    report_dir = report_dir or decycle_settings.REPORT_DIR

    instances = suite_instances(suite, n_max, seed)
    result = SweepResult(suite)
    started = time.perf_counter()
    try:
        if workers > 1:
            _run_parallel(suite, instances, budget, workers, result, cache)
        else:
            context = SolveContext(budget=budget, known=cache.snapshot())
            _run_sequential(suite, instances, context, result, cache)
    except BudgetExhausted as e:
        logger.error('Suite %s stopped: %s', suite, e)
        result.exhausted = e

    result.records = sorted_records(result.records)
    summary = summarize(result.records)
    metadata = {
        'suite': suite,
        'n_max': n_max,
        'seed': seed,
        'workers': workers,
        'instances': len(instances),
        'solver_invocations': result.invocations,
        'complete': result.exhausted is None and result.aborted_on is None,
        'budget': None if budget is None else {
            'node_limit': budget.node_limit, 'time_limit': budget.time_limit,
        },
        'wall_time': round(time.perf_counter() - started, 3),
    }
    if result.aborted_on is not None:
        metadata['aborted_on'] = result.aborted_on.as_dict()
        logger.error('Suite %s aborted on %s', suite, result.aborted_on.instance_key)
    if result.exhausted is not None:
        metadata['budget_exhausted'] = {
            'message': str(result.exhausted),
            'lower_bound': result.exhausted.lower_bound,
            'incumbent': result.exhausted.incumbent.as_dict()
            if result.exhausted.incumbent is not None else None,
        }
    result.report_paths = write_reports(result.records, report_dir, suite, metadata, formats)
    cache.store()

    logger.info('Suite %s: %s (%d solver invocations)', suite, summary, result.invocations)
    for record in result.findings:
        logger.warning('Finding in suite %s: %s', suite, record.instance_key)
    return result


def read_graph_input(argument: str) -> Graph:
    """ Reads an edge-list file when ``argument`` names one, a graph6 string otherwise. """
    if os.path.isfile(argument):
        with open(argument, encoding='utf-8') as f:
            return read_edge_list(f.read())
    return decode_graph6(argument.strip())


def solve_one(
    argument: str, budget: Optional[SolverBudget] = None, cache: Optional[ResultCache] = None,
) -> Tuple[str, DecyclingCertificate]:
    """ Solves a single graph given as graph6 or as an edge-list path; returns its key too. """
    g = read_graph_input(argument)
    key = GRAPH6_PREFIX + encode_graph6(g)
    if cache is not None and key in cache:
        try:
            return key, cache.get(key).to_certificate()
        except GraphFormatError as e:
            logger.warning('Ignoring the unreadable cache entry of %s: %s', key, e)
    certificate = decycling_number(g, budget)
    if cache is not None:
        cache.merge({key: certificate})
        cache.store()
    return key, certificate
