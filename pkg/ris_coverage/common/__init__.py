from .files import *
from .statistics import *
