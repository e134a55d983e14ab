from .register import PAIR_FILTERS

from .filters import *
from .scan import *
from .oracle import *
from .contraction import *
