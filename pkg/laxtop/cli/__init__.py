"""
laxtop.cli
~~~~~~~~~~

The ``laxtop`` command line: space files, DOT output and the subcommands.
"""

from .parsers import *
from .dot import *
from .commands import *
