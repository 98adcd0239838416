from .core import *
from .parsing import *
