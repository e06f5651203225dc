import pickle

import pytest
from django.core.exceptions import ValidationError
from mock import patch

from decycle.conf import settings as decycle_settings
from decycle.core import validators
from decycle.core.exceptions import BudgetExhausted, GraphFormatError


class TestOrderCapValidator(object):
    def test_uses_the_global_cap_by_default(self):
        # Setup
        validator = validators.OrderCapValidator()
        # Run & check
        assert validator(decycle_settings.MAX_ORDER) is None
        with pytest.raises(ValidationError):
            validator(decycle_settings.MAX_ORDER + 1)

    def test_reads_the_global_cap_at_call_time(self):
        # Setup
        validator = validators.OrderCapValidator()
        # Run & check
        with patch.object(decycle_settings, 'MAX_ORDER', 8):
            with pytest.raises(ValidationError):
                validator(9)

    def test_can_use_a_custom_cap(self):
        # Setup
        validator = validators.OrderCapValidator(12)
        # Run & check
        assert validator(12) is None
        with pytest.raises(ValidationError):
            validator(13)


class TestGraph6Validator(object):
    def test_accepts_graph6_strings(self):
        # Run & check
        assert validators.validate_graph6('Cl') is None
        assert validators.validate_graph6('>>graph6<<Cl\n') is None

    def test_reports_the_first_invalid_byte(self):
        # Run
        with pytest.raises(ValidationError) as excinfo:
            validators.validate_graph6('Cl l')
        # Check
        assert excinfo.value.code == 'invalid'
        assert excinfo.value.params == {'offset': 2}

    def test_rejects_empty_strings(self):
        # Run & check
        with pytest.raises(ValidationError):
            validators.validate_graph6('  ')


class TestPositiveValidator(object):
    def test_rejects_zero_and_negative_values(self):
        # Run & check
        assert validators.validate_positive(0.5) is None
        with pytest.raises(ValidationError):
            validators.validate_positive(0)
        with pytest.raises(ValidationError):
            validators.validate_positive(-3)


class TestExceptions(object):
    def test_graph_format_errors_carry_their_position(self):
        # Run
        error = GraphFormatError('Bad byte', position=7)
        # Check
        assert error.position == 7
        assert str(error) == 'Bad byte (at 7)'
        assert isinstance(error, ValueError)

    def test_budget_exhaustion_survives_pickling(self):
        # Setup
        error = BudgetExhausted('out of nodes', incumbent=None, lower_bound=3, nodes=10,
                                wall_time=1.5)
        # Run
        copy = pickle.loads(pickle.dumps(error))
        # Check
        assert str(copy) == 'out of nodes'
        assert (copy.lower_bound, copy.nodes, copy.wall_time) == (3, 10, 1.5)
