from typing import Iterable, Tuple, Union

from ..errors import DomainError, WeightOverflowError

__all__ = [
    'MAX_WEIGHT', 'VertexSet', 'as_mask', 'vertices_of', 'full_mask',
    'popcount', 'check_weight'
    ]

# every stored weight and the total edge weight fit a signed 64-bit integer;
# products used for exact comparisons are computed on Python integers
MAX_WEIGHT = 2**63 - 1

# an int is read as a bitset (bit i set <=> vertex i in the set)
VertexSet = Union[int, Iterable[int]]


def full_mask(n: int) -> int:
    return (1 << n) - 1

def popcount(mask: int) -> int:
    return bin(mask).count('1')

def as_mask(vertices: VertexSet, n: int) -> int:
    ''' Convert a vertex set to its bitset, checking ids are in [0, n).

    Args:
        vertices (int or iterable): bitset or iterable of vertex ids
        n (int): vertex count

    Returns:
        int
    '''

    if isinstance(vertices, bool):
        raise DomainError('a vertex set cannot be a boolean')

    if isinstance(vertices, int):
        if vertices < 0 or vertices >> n:
            raise DomainError(f'bitset {vertices:#x} has vertices outside [0, {n})')
        return vertices

    mask = 0
    for v in vertices:
        if not isinstance(v, int) or isinstance(v, bool):
            raise DomainError(f'vertex ids must be integers, got {v!r}')
        if not 0 <= v < n:
            raise DomainError(f'vertex {v} outside [0, {n})')
        mask |= 1 << v
    return mask

def vertices_of(mask: int) -> Tuple[int, ...]:
    ''' Sorted vertex ids of a bitset '''
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)

def check_weight(value: int, what: str = 'weight') -> int:
    if value > MAX_WEIGHT:
        raise WeightOverflowError(f'{what} {value} exceeds 64-bit range')
    return value
