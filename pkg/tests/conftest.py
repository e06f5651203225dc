import os
import shutil

import pytest

from . import settings


@pytest.fixture(scope='session', autouse=True)
def empty_reports():
    """ Removes the reports that could have been written during tests. """
    yield
    shutil.rmtree(settings.DECYCLE_REPORT_DIR, ignore_errors=True)


@pytest.fixture
def report_dir(tmpdir):
    path = str(tmpdir.mkdir('reports'))
    yield path
    if os.path.isdir(path):
        shutil.rmtree(path)
