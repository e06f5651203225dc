"""
    Check records
    =============

    This module defines ``CheckRecord``, the outcome of checking one claim on one instance. A record
    stores the values it was decided on, so its verdict can always be recomputed from them.

"""

from dataclasses import dataclass, field
from typing import Any, Dict, List

from .claims import VERDICT_FAIL, VERDICT_REPORT_ONLY, VERDICTS, get_claim


# Columns of the tabular report, in order.
ROW_FIELDS = ('claim_id', 'instance', 'expected', 'computed', 'verdict', 'wall_time', 'notes')


@dataclass
class CheckRecord:
    claim_id: str
    instance: Dict[str, Any]
    expected: str
    computed: Dict[str, Any]
    verdict: str
    wall_time: float = 0.0
    notes: List[str] = field(default_factory=list)
    certificates: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError('Unknown verdict {!r}'.format(self.verdict))

    @property
    def instance_key(self) -> str:
        return self.instance.get('key', '')

    @property
    def sort_key(self):
        return (self.claim_id, self.instance_key)

    @property
    def failed(self) -> bool:
        return self.verdict == VERDICT_FAIL

    @property
    def is_finding(self) -> bool:
        """ Tells whether a report-only record observed a violation of the conjectured relation. """
        return self.verdict == VERDICT_REPORT_ONLY and bool(self.computed.get('violation'))

    def as_dict(self, body_only: bool = False) -> Dict[str, Any]:
        """ Returns the JSON form of the record.

        With ``body_only`` the timing fields are left out, so that the result only depends on the
        instance and on the values decided.

        """
        data = {
            'claim_id': self.claim_id,
            'instance': self.instance,
            'expected': self.expected,
            'computed': self.computed,
            'verdict': self.verdict,
            'notes': list(self.notes),
            'certificates': self.certificates,
        }
        if body_only:
            data['certificates'] = {
                name: {k: v for k, v in certificate.items() if k not in ('nodes', 'wall_time')}
                for name, certificate in self.certificates.items()
            }
        else:
            data['wall_time'] = round(self.wall_time, 6)
        return data

    def as_row(self) -> Dict[str, str]:
        def flat(mapping):
            return ';'.join('{}={}'.format(k, mapping[k]) for k in sorted(mapping))

        return {
            'claim_id': self.claim_id,
            'instance': self.instance_key,
            'expected': self.expected,
            'computed': flat(self.computed),
            'verdict': self.verdict,
            'wall_time': '{:.6f}'.format(self.wall_time),
            'notes': ' | '.join(self.notes),
        }


def recompute_verdict(record: CheckRecord) -> str:
    """ Decides the verdict of ``record`` again from its computed values only. """
    return get_claim(record.claim_id).verdict(record.computed)


def is_self_consistent(record: CheckRecord) -> bool:
    return recompute_verdict(record) == record.verdict
