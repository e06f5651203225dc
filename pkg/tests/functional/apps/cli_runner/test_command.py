import csv
import json
import os
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError
from mock import patch

from decycle.apps.cli_runner.main import main
from decycle.apps.graph_core.constructors import make_cycle, make_path
from decycle.apps.graph_core.formats import decode_graph6, encode_graph6, write_edge_list
from decycle.apps.product.product import cartesian_product


def run(*args):
    out = StringIO()
    call_command('decycle', *args, stdout=out)
    return out.getvalue()


class TestSolveCommand(object):
    def test_prints_the_certificate_of_a_graph6_input(self):
        # Run
        data = json.loads(run('solve', 'Cl'))
        # Check
        assert data['value'] == 1
        assert data['graph'] == {'key': 'g6:Cl'}
        assert data['optimality'] == 'proven'

    def test_reads_an_edge_list_file(self, tmpdir):
        # Setup
        path = tmpdir.join('torus.txt')
        path.write_text(
            write_edge_list(cartesian_product(make_cycle(3), make_cycle(3))), encoding='utf-8')
        # Run
        data = json.loads(run('solve', str(path)))
        # Check
        assert data['value'] == 4
        assert len(data['vertices']) == 4

    def test_can_print_csv(self):
        # Run
        output = run('solve', encode_graph6(make_path(5)), '--format', 'csv')
        # Check
        lines = output.splitlines()
        assert lines[0] == 'key,value,vertices,method,optimality,nodes'
        assert lines[1].split(',')[1] == '0'

    def test_stores_solutions_in_the_cache(self, tmpdir):
        # Setup
        path = str(tmpdir.join('results.tsv'))
        # Run
        run('solve', 'Cl', '--cache', path)
        # Check
        with open(path, encoding='utf-8') as f:
            assert f.read().startswith('g6:Cl\t1\t')

    def test_rejects_an_invalid_graph6_string(self):
        # Run & check
        with pytest.raises(CommandError) as excinfo:
            run('solve', 'C l')
        assert excinfo.value.returncode == 1

    def test_rejects_a_non_positive_budget(self):
        # Run & check
        with pytest.raises(CommandError) as excinfo:
            run('solve', 'Cl', '--node-limit', '0')
        assert excinfo.value.returncode == 1

    @patch('decycle.apps.fvs_solver.solver.packed_cycle_count', return_value=0)
    @patch('decycle.apps.fvs_solver.solver.degree_lower_bound', return_value=0)
    def test_exits_with_two_when_the_budget_runs_out(self, *mocks):
        # Setup
        g6 = encode_graph6(cartesian_product(make_cycle(3), make_cycle(3)))
        # Run & check
        with pytest.raises(CommandError) as excinfo:
            run('solve', g6, '--node-limit', '1')
        assert excinfo.value.returncode == 2
        assert '[1, ' in str(excinfo.value)


class TestSweepCommand(object):
    def test_runs_a_suite(self, report_dir):
        # Run
        output = run('sweep', 'torus', '--n-max', '4', '--report-dir', report_dir)
        # Check
        assert 'Suite torus: 3 record(s), no failures' in output
        assert sorted(os.listdir(report_dir)) == ['torus.csv', 'torus.json']

    def test_can_write_a_single_format(self, report_dir):
        # Run
        run('sweep', 'grid', '--n-max', '3', '--report-dir', report_dir, '--format', 'csv')
        # Check
        assert os.listdir(report_dir) == ['grid.csv']

    def test_warns_about_report_only_suites(self, report_dir):
        # Run
        output = run('sweep', 'conjecture', '--n-max', '3', '--report-dir', report_dir)
        # Check
        assert 'REPORT-ONLY' in output.upper()

    @patch('decycle.apps.theorem_suites.claims.torus_formula', return_value=0)
    def test_exits_with_one_on_failing_records(self, mock_formula, report_dir):
        # Run & check
        with pytest.raises(CommandError) as excinfo:
            run('sweep', 'torus', '--n-max', '3', '--report-dir', report_dir)
        assert excinfo.value.returncode == 1
        assert 'C3 x C3' in str(excinfo.value)

    @patch('decycle.apps.fvs_solver.solver.packed_cycle_count', return_value=0)
    @patch('decycle.apps.fvs_solver.solver.degree_lower_bound', return_value=0)
    def test_exits_with_two_when_the_budget_runs_out(
        self, mock_degree_bound, mock_packing, report_dir,
    ):
        # Run & check
        with pytest.raises(CommandError) as excinfo:
            run('sweep', 'grid', '--n-max', '3', '--node-limit', '1', '--report-dir', report_dir)
        assert excinfo.value.returncode == 2
        assert os.listdir(report_dir)

    def test_rejects_an_unsupported_order(self, report_dir):
        # Run & check
        with pytest.raises(CommandError) as excinfo:
            run('sweep', 'conjecture', '--n-max', '7', '--report-dir', report_dir)
        assert excinfo.value.returncode == 1


class TestEnumerateCommand(object):
    def test_prints_one_graph6_string_per_tree(self):
        # Run
        lines = run('enumerate', '4').splitlines()
        # Check
        assert len(lines) == 2
        assert len(set(lines)) == 2
        assert all(decode_graph6(line).n == 4 for line in lines)

    def test_can_print_json(self):
        # Run
        trees = json.loads(run('enumerate', '5', '--format', 'json'))
        # Check
        assert len(trees) == 3
        assert all(tree['code'].startswith('(') for tree in trees)

    def test_can_print_csv(self):
        # Run
        rows = list(csv.DictReader(StringIO(run('enumerate', '5', '--format', 'csv'))))
        # Check
        assert len(rows) == 3
        assert [row['graph6'] for row in rows] == run('enumerate', '5').splitlines()
        assert all(decode_graph6(row['graph6']).n == 5 for row in rows)

    @pytest.mark.parametrize('order', ['0', '13'])
    def test_rejects_orders_out_of_range(self, order):
        # Run & check
        with pytest.raises(CommandError) as excinfo:
            run('enumerate', order)
        assert excinfo.value.returncode == 1


class TestCertifyCommand(object):
    def test_prism(self):
        # Run
        data = json.loads(run('certify', 'prism', encode_graph6(make_path(4))))
        # Check
        assert data['value'] == 2
        assert data['construction'] == 'prism-cover'
        assert data['optimality'] == 'proven'

    def test_star_layer(self, tmpdir):
        # Setup
        directory = str(tmpdir.join('export'))
        # Run
        data = json.loads(run(
            'certify', 'star-layer', encode_graph6(make_path(4)), '--n-star', '4',
            '--output-dir', directory))
        # Check
        assert data['value'] == 3
        assert data['construction'] == 'star-layer'
        assert len(data['exported']) == 2
        assert all(os.path.exists(path) for path in data['exported'])

    def test_star_layer_needs_the_star_order(self):
        # Run & check
        with pytest.raises(CommandError) as excinfo:
            run('certify', 'star-layer', encode_graph6(make_path(4)))
        assert excinfo.value.returncode == 1

    def test_c4_family(self):
        # Run
        data = json.loads(run('certify', 'c4-family', 'Cl', encode_graph6(make_path(4))))
        # Check
        assert data['matching_numbers'] == [2, 2]
        assert len(data['cycles']) == 4
        assert all(len(cycle) == 4 for cycle in data['cycles'])

    def test_checks_the_number_of_factors(self):
        # Run & check
        with pytest.raises(CommandError) as excinfo:
            run('certify', 'prism', 'Cl', 'Cl')
        assert excinfo.value.returncode == 1


class TestConsoleScript(object):
    def test_returns_zero_on_success(self, capsys):
        # Run & check
        assert main(['enumerate', '3']) == 0
        assert len(capsys.readouterr().out.splitlines()) == 1

    def test_returns_the_command_error_code(self, capsys):
        # Run & check
        assert main(['solve', 'C l']) == 1
        assert capsys.readouterr().err.startswith('decycle: ')
