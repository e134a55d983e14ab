from .sigma import *
from .lemma import *
