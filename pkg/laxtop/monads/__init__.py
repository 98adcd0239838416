from .base import *
from .identity import *
from .powerset import *
from .ultrafilter import *
from .monoid import *
from .degenerate import *
from .laws import *
