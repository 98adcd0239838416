from .extension import *
from .axioms import *
from .structures import *
from .algebraic import *
from .closure import *
from .preservation import *
