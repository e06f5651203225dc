"""
    Console script
    ==============

    This module provides the ``decycle`` console script, a thin wrapper around the ``decycle``
    management command in the way ``manage.py`` wraps a project's commands.

"""

import os
import sys

import django
from django.core.management import call_command
from django.core.management.base import CommandError


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'decycle.settings')
    django.setup()
    try:
        call_command('decycle', *argv)
    except CommandError as e:
        sys.stderr.write('decycle: {}\n'.format(e))
        return e.returncode
    return 0


if __name__ == '__main__':
    sys.exit(main())
