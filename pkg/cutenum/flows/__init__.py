from .register import FLOW_ENGINES
from .engines import *
from .terminal import *
