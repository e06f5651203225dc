import pytest
from django.core.exceptions import ImproperlyConfigured
from mock import patch

from decycle.apps.fvs_solver.certificates import (
    METHOD_CONSTRUCTION, OPTIMALITY_PROVEN, DecyclingCertificate, SolverBudget
)
from decycle.apps.graph_core.constructors import make_cycle
from decycle.apps.graph_core.graph import VertexSet
from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import CertificateError


class TestSolverBudget(object):
    def test_must_be_positive(self):
        # Run & check
        with pytest.raises(ValueError):
            SolverBudget(0, 1.0)
        with pytest.raises(ValueError):
            SolverBudget(10, -1)

    def test_reads_its_defaults_from_the_settings(self):
        # Run
        budget = SolverBudget.default()
        # Check
        assert budget.node_limit == decycle_settings.SOLVER_NODE_LIMIT
        assert budget.time_limit == decycle_settings.SOLVER_TIME_LIMIT

    def test_reports_bad_settings_as_a_configuration_error(self):
        # Run & check
        with patch.object(decycle_settings, 'SOLVER_NODE_LIMIT', 0):
            with pytest.raises(ImproperlyConfigured):
                SolverBudget.default()


class TestDecyclingCertificate(object):
    def build(self, g, vertices, value=None):
        vertices = VertexSet.from_iterable(g.n, vertices)
        return DecyclingCertificate(
            graph=g,
            vertices=vertices,
            value=len(vertices) if value is None else value,
            method=METHOD_CONSTRUCTION,
            optimality=OPTIMALITY_PROVEN,
        )

    def test_accepts_a_decycling_set(self):
        # Run
        certificate = self.build(make_cycle(5), [2])
        # Check
        assert certificate.value == 1
        assert certificate.forest_number == 4

    def test_rejects_a_set_that_leaves_a_cycle(self):
        # Run & check
        with pytest.raises(CertificateError):
            self.build(make_cycle(5), [])

    def test_rejects_a_wrong_value(self):
        # Run & check
        with pytest.raises(CertificateError):
            self.build(make_cycle(5), [0, 1], value=1)

    def test_rejects_a_set_of_another_universe(self):
        # Run & check
        with pytest.raises(CertificateError):
            DecyclingCertificate(
                graph=make_cycle(5), vertices=VertexSet.full(6), value=6,
                method=METHOD_CONSTRUCTION, optimality=OPTIMALITY_PROVEN,
            )

    def test_can_be_serialized(self):
        # Setup
        certificate = self.build(make_cycle(4), [3])
        # Run
        data = certificate.as_dict()
        # Check
        assert data['graph'] == {'graph6': 'Cl'}
        assert data['vertices'] == [3]
        assert data['forest_number'] == 3
        assert 'construction' not in data
        assert certificate.as_dict({'key': 'C4'})['graph'] == {'key': 'C4'}
