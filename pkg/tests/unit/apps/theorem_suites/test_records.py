import pytest
from faker import Faker

from decycle.apps.theorem_suites.claims import VERDICT_FAIL, VERDICT_PASS, VERDICT_REPORT_ONLY
from decycle.apps.theorem_suites.records import (
    ROW_FIELDS, CheckRecord, is_self_consistent, recompute_verdict
)


faker = Faker()


def build_record(**kwargs):
    attrs = {
        'claim_id': 'torus-formula',
        'instance': {'key': 'C3 x C4', 'n': 3, 'n2': 4},
        'expected': '∇ = 5',
        'computed': {'n': 3, 'n2': 4, 'nabla': 5},
        'verdict': VERDICT_PASS,
        'wall_time': faker.pyfloat(positive=True, max_value=10),
        'certificates': {'product': {'value': 5, 'vertices': [0, 5, 7, 9, 10], 'nodes': 12,
                                     'wall_time': 0.01}},
    }
    attrs.update(kwargs)
    return CheckRecord(**attrs)


class TestCheckRecord(object):
    def test_rejects_unknown_verdicts(self):
        # Run & check
        with pytest.raises(ValueError):
            build_record(verdict='maybe')

    def test_knows_its_instance_key(self):
        # Setup
        record = build_record()
        # Run & check
        assert record.instance_key == 'C3 x C4'
        assert record.sort_key == ('torus-formula', 'C3 x C4')
        assert not record.failed
        assert not record.is_finding

    def test_flags_findings_of_report_only_records(self):
        # Run
        record = build_record(
            claim_id='open-conjecture', computed={'violation': True}, verdict=VERDICT_REPORT_ONLY)
        # Check
        assert record.is_finding
        assert not record.failed

    def test_body_leaves_timings_out(self):
        # Setup
        record = build_record()
        # Run
        full = record.as_dict()
        body = record.as_dict(body_only=True)
        # Check
        assert 'wall_time' in full
        assert 'wall_time' not in body
        assert body['certificates']['product'] == {'value': 5, 'vertices': [0, 5, 7, 9, 10]}
        assert full['certificates']['product']['nodes'] == 12

    def test_can_be_flattened_to_a_row(self):
        # Setup
        record = build_record(notes=['first', 'second'])
        # Run
        row = record.as_row()
        # Check
        assert tuple(row) == ROW_FIELDS
        assert row['computed'] == 'n=3;n2=4;nabla=5'
        assert row['notes'] == 'first | second'


class TestVerdictRecomputation(object):
    def test_recomputes_the_verdict_from_the_computed_values(self):
        # Run & check
        assert recompute_verdict(build_record()) == VERDICT_PASS
        assert is_self_consistent(build_record())

    def test_detects_a_tampered_verdict(self):
        # Setup
        record = build_record(verdict=VERDICT_FAIL)
        # Run & check
        assert not is_self_consistent(record)
