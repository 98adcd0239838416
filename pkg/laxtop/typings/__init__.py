from .elements import *
from .spacefile import *
