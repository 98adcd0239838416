from .base import *
from .conditions import *
