"""
    Decycle command
    ===============

    This module provides the ``decycle`` management command and its subcommands:

    * ``solve <graph6 | edge-list path>`` prints the certificate of the decycling number;
    * ``sweep <suite>`` runs a theorem suite and writes its reports;
    * ``enumerate <n>`` prints the trees of order ``n``;
    * ``certify {star-layer,prism,c4-family} <graph6>...`` prints construction certificates.

    Exit status: 0 on success (report-only findings included), 1 on failing records or invalid
    input, 2 when a solver budget runs out.

"""

import csv
import json
import os

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
from django.core.serializers.json import DjangoJSONEncoder

from decycle.apps.cli_runner.cache import ResultCache
from decycle.apps.cli_runner.orchestrator import read_graph_input, run_sweep, solve_one
from decycle.apps.constructions.constructions import (
    disjoint_c4_family, prism_cover_set, star_layer_set
)
from decycle.apps.fvs_solver.certificates import SolverBudget
from decycle.apps.graph_core.constructors import make_path, make_star
from decycle.apps.matching_cover.matching import matching_number
from decycle.apps.product.export import write_product
from decycle.apps.theorem_suites.context import graph6_descriptor, tree_descriptor
from decycle.apps.theorem_suites.sweeps import SUITES
from decycle.apps.tree_enum.enumeration import tree_codes, trees_as_graph6
from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import BudgetExhausted, DecycleError
from decycle.core.validators import OrderCapValidator, validate_graph6, validate_positive


EXIT_FAILURE = 1
EXIT_BUDGET = 2

CONSTRUCTIONS = ('star-layer', 'prism', 'c4-family')


class Command(BaseCommand):
    help = 'Computes exact decycling numbers and checks claims about products of trees.'

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='subcommand', required=True)

        solve = subparsers.add_parser('solve', help='Solve one graph (graph6 or edge-list path).')
        solve.add_argument('input')
        self._add_common_arguments(solve)

        sweep = subparsers.add_parser('sweep', help='Run a theorem suite.')
        sweep.add_argument('suite', choices=sorted(SUITES))
        self._add_common_arguments(sweep)

        enumerate_ = subparsers.add_parser('enumerate', help='List the trees of a given order.')
        enumerate_.add_argument('order', type=int)
        enumerate_.add_argument('--format', choices=('csv', 'json'), default=None)

        certify = subparsers.add_parser('certify', help='Emit a construction certificate.')
        certify.add_argument('construction', choices=CONSTRUCTIONS)
        certify.add_argument('graphs', nargs='+', help='Factors as graph6 strings.')
        certify.add_argument('--n-star', type=int, default=None)
        certify.add_argument('--output-dir', default=None)

    def _add_common_arguments(self, parser):
        parser.add_argument('--budget-seconds', type=float, default=None)
        parser.add_argument('--node-limit', type=int, default=None)
        parser.add_argument('--cache', default=None, help='Cache file (default: $DECYCLE_CACHE).')
        parser.add_argument('--format', choices=('csv', 'json'), default=None)
        parser.add_argument('--workers', type=int, default=None)
        parser.add_argument('--n-max', type=int, default=None)
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument('--report-dir', default=None)

    def handle(self, *args, **options):
        handler = getattr(self, 'handle_' + options['subcommand'])
        try:
            handler(options)
        except BudgetExhausted as e:
            raise CommandError(str(e), returncode=EXIT_BUDGET)
        except ValidationError as e:
            raise CommandError('; '.join(e.messages), returncode=EXIT_FAILURE)
        except (DecycleError, ValueError) as e:
            raise CommandError(str(e), returncode=EXIT_FAILURE)

    # Helpers

    def _validate(self, options):
        for name in ('budget_seconds', 'node_limit', 'workers', 'n_max'):
            if options.get(name) is not None:
                validate_positive(options[name])

    def _budget(self, options) -> SolverBudget:
        default = SolverBudget.default()
        return SolverBudget(
            node_limit=options.get('node_limit') or default.node_limit,
            time_limit=options.get('budget_seconds') or default.time_limit,
        )

    def _cache(self, options) -> ResultCache:
        return ResultCache(options.get('cache') or decycle_settings.CACHE_PATH)

    def _graph(self, argument):
        if not os.path.isfile(argument):
            validate_graph6(argument)
        return read_graph_input(argument)

    def _write_json(self, data):
        self.stdout.write(json.dumps(data, cls=DjangoJSONEncoder, indent=2, sort_keys=True))

    # Subcommands

    def handle_solve(self, options):
        self._validate(options)
        self._graph(options['input'])
        budget = self._budget(options)
        cache = self._cache(options).load(budget=budget)
        key, certificate = solve_one(options['input'], budget, cache)
        data = certificate.as_dict({'key': key})
        if options.get('format') == 'csv':
            writer = csv.writer(self.stdout)
            writer.writerow(['key', 'value', 'vertices', 'method', 'optimality', 'nodes'])
            writer.writerow([
                key, data['value'], ' '.join(str(v) for v in data['vertices']), data['method'],
                data['optimality'], data['nodes'],
            ])
        else:
            self._write_json(data)

    def handle_sweep(self, options):
        self._validate(options)
        budget = self._budget(options)
        cache = self._cache(options).load(budget=budget)
        formats = (options['format'],) if options.get('format') else ('csv', 'json')
        result = run_sweep(
            options['suite'],
            n_max=options.get('n_max'),
            budget=budget,
            workers=options.get('workers'),
            cache=cache,
            seed=options.get('seed'),
            report_dir=options.get('report_dir'),
            formats=formats,
        )
        for path in result.report_paths:
            self.stdout.write('Report written to {}'.format(path))
        for banner in result.banners:
            self.stdout.write(self.style.WARNING(banner))
        if result.exhausted is not None:
            raise result.exhausted
        if result.failures:
            raise CommandError(
                '{} failing record(s) in suite {}; first: {}'.format(
                    len(result.failures), result.suite, result.failures[0].instance_key),
                returncode=EXIT_FAILURE,
            )
        self.stdout.write(self.style.SUCCESS(
            'Suite {}: {} record(s), no failures'.format(result.suite, len(result.records))))

    def handle_enumerate(self, options):
        order = options['order']
        OrderCapValidator(decycle_settings.TREE_MAX_ORDER)(order)
        lines = trees_as_graph6(order)
        output_format = options.get('format')
        if output_format is None:
            for line in lines:
                self.stdout.write(line)
            return
        rows = [
            {'code': str(code), 'graph6': line} for code, line in zip(tree_codes(order), lines)
        ]
        if output_format == 'json':
            self._write_json(rows)
        else:
            writer = csv.DictWriter(self.stdout, fieldnames=('code', 'graph6'))
            writer.writeheader()
            writer.writerows(rows)

    def handle_certify(self, options):
        construction = options['construction']
        graphs = [self._graph(argument) for argument in options['graphs']]
        expected = 2 if construction == 'c4-family' else 1
        if len(graphs) != expected:
            raise CommandError('{} takes {} graph(s), got {}'.format(
                construction, expected, len(graphs)), returncode=EXIT_FAILURE)

        if construction == 'c4-family':
            g1, g2 = graphs
            family = disjoint_c4_family(g1, g2)
            data = {
                'factors': [graph6_descriptor(g1), graph6_descriptor(g2)],
                'matching_numbers': [matching_number(g1), matching_number(g2)],
                'cycles': [cycle.as_list() for cycle in family],
            }
            factors = (g1, g2, data['factors'][0], data['factors'][1])
        elif construction == 'star-layer':
            (t,) = graphs
            n_star = options.get('n_star')
            if n_star is None:
                raise CommandError('star-layer needs --n-star', returncode=EXIT_FAILURE)
            star = make_star(n_star)
            data = star_layer_set(t, n_star).as_dict()
            factors = (t, star, tree_descriptor(t), tree_descriptor(star))
        else:
            (t,) = graphs
            edge = make_path(2)
            data = prism_cover_set(t).as_dict()
            factors = (t, edge, tree_descriptor(t), tree_descriptor(edge))

        if options.get('output_dir'):
            paths = write_product(*factors, directory=options['output_dir'], stem=construction)
            data['exported'] = list(paths)
        self._write_json(data)
