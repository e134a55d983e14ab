from .registry import *
from .useful_funcs import *
from .seed import *
from .timer import *
from .progress import *
from .meters import *
from .logger import *
