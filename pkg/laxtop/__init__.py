"""
LaxTop
~~~~~~

Lax relational monad algebras (T-spaces) over finite sets.
"""

__title__   = 'LaxTop'
__author__  = 'NerdGuyAhmad'
__version__ = '0.0.1'

from . import typings, utils

from .core import *
from .errors import *
from .flags import *
from .finsetcore import *
from .monads import *
from .models import *
from .tspace import *
from .reflect import *
from .fibgen import *
