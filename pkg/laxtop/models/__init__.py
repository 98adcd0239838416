from .space import *
from .algebra import *
from .reflection import *
from .gen import *
