from .congruence import *
from .beta import *
from .reflectors import *
from .verify import *
from .suplattice import *
