import random
import numpy

from typing import Optional

__all__ = ['set_seed', 'make_rng']

def set_seed(seed: int) -> None:
    ''' Function to set seed for reproducibility of tools runs.

    Library functions never rely on global state: they take an explicit seed
    and build their own generator with `make_rng`.
    '''
    random.seed(seed)
    numpy.random.seed(seed)

def make_rng(seed: Optional[int] = None) -> numpy.random.Generator:
    ''' Private numpy generator for a seeded component '''
    return numpy.random.default_rng(seed)
