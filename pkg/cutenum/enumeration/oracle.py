import numpy

from typing import Iterator, List, Set, Tuple

from ..errors import DomainError
from ..graphs.graph import Cut, Graph, require_connected
from ..graphs.types import VertexSet, as_mask
from ..utils.timer import timer
from .scan import AlphaLike, check_alpha

__all__ = ['BRUTE_FORCE_LIMIT', 'brute_force_lambda', 'brute_force_cuts', 'brute_force_min_terminal_cuts']

BRUTE_FORCE_LIMIT = 24

_CHUNK = 1 << 18


def _guard(g: Graph) -> None:
    if g.n > BRUTE_FORCE_LIMIT:
        raise DomainError(
            f'brute force is limited to n <= {BRUTE_FORCE_LIMIT} (2^n bipartitions), got n={g.n}')
    require_connected(g)

def _canonical_values(g: Graph) -> Iterator[Tuple[numpy.ndarray, numpy.ndarray]]:
    ''' Chunks of (sides, values) over all canonical sides: the non-zero
    even bitsets below 2^n, i.e. those excluding vertex 0 '''

    count = 1 << (g.n - 1)
    edges = numpy.array(g.edges, dtype=numpy.int64).reshape(-1, 3)
    for start in range(1, count, _CHUNK):
        sides = numpy.arange(start, min(start + _CHUNK, count), dtype=numpy.int64) << 1
        values = numpy.zeros(sides.shape, dtype=numpy.int64)
        for u, v, w in edges:
            crossing = ((sides >> u) ^ (sides >> v)) & 1
            values += crossing * w
        yield sides, values

def brute_force_lambda(g: Graph) -> int:
    ''' λ by exhaustive scan over all 2^(n-1) - 1 bipartitions '''
    _guard(g)
    return int(min(values.min() for _, values in _canonical_values(g)))

@timer('brute force')
def brute_force_cuts(g: Graph, alpha: AlphaLike) -> Set[Cut]:
    ''' Every canonical cut with value <= α·λ, by exhaustive scan.

    Args:
        g (Graph): connected graph with n <= 24
        alpha (Fraction, int or str): approximation factor >= 1

    Returns:
        set of Cut
    '''

    alpha = check_alpha(alpha)
    lam = brute_force_lambda(g)

    # values are integers, so d <= α·λ  <=>  d <= floor(p·λ / q)
    threshold = min((alpha.numerator * lam) // alpha.denominator, 2**63 - 1)

    cuts = set()
    for sides, values in _canonical_values(g):
        keep = values <= threshold
        for side, value in zip(sides[keep].tolist(), values[keep].tolist()):
            cuts.add(Cut(side, value))
    return cuts

def brute_force_min_terminal_cuts(g: Graph, source: VertexSet, sink: VertexSet) -> Tuple[int, List[int]]:
    ''' Minimum (S,T)-terminal cut value and every minimum source side,
    ascending, by enumerating all U with S ⊆ U ⊆ V∖T '''

    _guard(g)
    source = as_mask(source, g.n)
    sink = as_mask(sink, g.n)
    if source == 0 or sink == 0 or source & sink:
        raise DomainError('terminal sets must be non-empty and disjoint')

    free = g.full & ~(source | sink)
    best, sides = None, []
    sub = free
    while True:
        side = source | sub
        value = g.boundary(side)
        if best is None or value < best:
            best, sides = value, [side]
        elif value == best:
            sides.append(side)
        if sub == 0:
            break
        sub = (sub - 1) & free
    return best, sorted(sides)
