from .cartesian import *
from .gen import *
from .search import *
