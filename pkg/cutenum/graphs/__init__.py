from .types import *
from .graph import *
from .io import *
from .generators import *
