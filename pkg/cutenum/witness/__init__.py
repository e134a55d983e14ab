from .witness import *
