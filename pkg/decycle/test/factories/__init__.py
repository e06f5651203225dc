# -*- coding: utf-8 -*-

from .graphs import *  # noqa
from .trees import *  # noqa
