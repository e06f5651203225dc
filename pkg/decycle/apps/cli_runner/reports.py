"""
    Reports
    =======

    This module writes sweep reports: a CSV file with one row per record and a JSON document with
    the full records (certificates included) and the run metadata. Records are written in
    ``(claim_id, instance key)`` order.

"""

import csv
import json
import os
from typing import Dict, Iterable, List, Sequence

from django.core.serializers.json import DjangoJSONEncoder
from django.utils import timezone

from decycle.apps.theorem_suites.records import ROW_FIELDS, CheckRecord


FORMATS = ('csv', 'json')

REPORT_ONLY_BANNER = (
    'WARNING: this report contains report-only records; they never fail the run.'
)
FINDING_BANNER = (
    'WARNING: {} report-only record(s) violate the conjectured relation; see the records flagged '
    'as findings.'
)


def sorted_records(records: Iterable[CheckRecord]) -> List[CheckRecord]:
    return sorted(records, key=lambda record: record.sort_key)


def summarize(records: Sequence[CheckRecord]) -> Dict[str, int]:
    summary = {'total': len(records), 'pass': 0, 'fail': 0, 'report_only': 0, 'findings': 0}
    for record in records:
        summary[record.verdict] += 1
        summary['findings'] += record.is_finding
    return summary


def banners(records: Sequence[CheckRecord]) -> List[str]:
    summary = summarize(records)
    messages = []
    if summary['report_only']:
        messages.append(REPORT_ONLY_BANNER)
    if summary['findings']:
        messages.append(FINDING_BANNER.format(summary['findings']))
    return messages


def report_body(records: Iterable[CheckRecord]) -> List[Dict]:
    """ Returns the part of a report that only depends on the instances and the values decided. """
    return [record.as_dict(body_only=True) for record in sorted_records(records)]


def write_csv(records: Iterable[CheckRecord], path: str) -> str:
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.DictWriter(f, fieldnames=ROW_FIELDS)
        writer.writeheader()
        for record in sorted_records(records):
            writer.writerow(record.as_row())
    return path


def write_json(records: Iterable[CheckRecord], path: str, metadata: Dict) -> str:
    records = sorted_records(records)
    document = {
        'metadata': dict(metadata, generated_at=timezone.now()),
        'summary': summarize(records),
        'banners': banners(records),
        'records': [record.as_dict() for record in records],
    }
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(document, f, cls=DjangoJSONEncoder, indent=2, sort_keys=True, ensure_ascii=False)
        f.write('\n')
    return path


def write_reports(
    records: Iterable[CheckRecord], directory: str, stem: str, metadata: Dict,
    formats: Sequence[str] = FORMATS,
) -> List[str]:
    """ Writes ``<stem>.csv`` and / or ``<stem>.json`` into ``directory``; returns the paths. """
    records = list(records)
    os.makedirs(directory, exist_ok=True)
    paths = []
    for fmt in formats:
        path = os.path.join(directory, '{}.{}'.format(stem, fmt))
        if fmt == 'csv':
            paths.append(write_csv(records, path))
        elif fmt == 'json':
            paths.append(write_json(records, path, metadata))
        else:
            raise ValueError('Unknown report format {!r}'.format(fmt))
    return paths
