from django.core import validators
from django.core.exceptions import ValidationError
from django.utils.deconstruct import deconstructible

from decycle.conf import settings as decycle_settings


# Printable bytes allowed in a header-less graph6 string.
GRAPH6_MIN_BYTE = 63
GRAPH6_MAX_BYTE = 126


def _global_order_cap():
    return decycle_settings.MAX_ORDER


@deconstructible
class OrderCapValidator(validators.MaxValueValidator):
    """ Validates a vertex count against a cap; the global order cap is used when none is given. """

    message = 'Ensure this order is less than or equal to %(limit_value)s.'

    def __init__(self, limit_value=None, message=None):
        super().__init__(
            limit_value if limit_value is not None else _global_order_cap, message=message,
        )


def validate_graph6(value):
    """ Checks that a string only contains graph6 bytes; reports the first bad byte offset. """
    value = value.strip()
    if value.startswith('>>graph6<<'):
        value = value[len('>>graph6<<'):]
    if not value:
        raise ValidationError('Empty graph6 string.', code='empty')
    for offset, char in enumerate(value):
        if not GRAPH6_MIN_BYTE <= ord(char) <= GRAPH6_MAX_BYTE:
            raise ValidationError(
                'Invalid graph6 byte at offset %(offset)s.',
                code='invalid',
                params={'offset': offset},
            )


def validate_positive(value):
    if value is None or value <= 0:
        raise ValidationError('Ensure this value is positive.', code='not_positive')
