from .objects import *
from .ops import *
