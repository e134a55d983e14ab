from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..errors import DomainError
from ..graphs.graph import Graph
from ..graphs.types import VertexSet, as_mask, vertices_of

__all__ = [
    'UncrossPartition', 'sigma', 'check_inequality_1', 'build_uncross_partition', 
    'check_submodularity', 'check_symmetry'
    ]

_W, _Z = -1, -2


@dataclass(frozen=True)
class UncrossPartition:
    ''' Parts (Y_1, ..., Y_p, W, Z) of V as bitsets.

    Construction does not validate; `validate` checks that the parts cover V
    without overlap and, unless told otherwise, that none is empty.
    '''

    Y: Tuple[int, ...]
    W: int
    Z: int

    @property
    def p(self) -> int:
        return len(self.Y)

    @property
    def parts(self) -> Tuple[int, ...]:
        return (*self.Y, self.W, self.Z)

    @property
    def nonempty(self) -> bool:
        return all(self.parts)

    def validate(self, g: Graph, allow_empty: bool = False) -> None:
        if self.p < 2:
            raise DomainError(f'an uncrossing partition needs p >= 2 sets Y_i, got {self.p}')
        seen = 0
        for part in self.parts:
            if part < 0 or part >> g.n:
                raise DomainError(f'part {part:#x} has vertices outside [0, {g.n})')
            if seen & part:
                raise DomainError(f'parts overlap on {vertices_of(seen & part)}')
            seen |= part
        if seen != g.full:
            raise DomainError(f'parts miss vertices {vertices_of(g.full & ~seen)}')
        if not allow_empty:
            names = [f'Y_{i + 1}' for i in range(self.p)] + ['W', 'Z']
            empty = [name for name, part in zip(names, self.parts) if not part]
            if empty:
                raise DomainError(f'empty parts: {", ".join(empty)}')

    def labels(self, n: int) -> List[int]:
        ''' Part label per vertex: i for Y_i (0-based), -1 for W, -2 for Z '''
        label = [0] * n
        for i, y in enumerate(self.Y):
            for v in vertices_of(y):
                label[v] = i
        for v in vertices_of(self.W):
            label[v] = _W
        for v in vertices_of(self.Z):
            label[v] = _Z
        return label

    def as_dict(self) -> dict:
        return {
            'Y': [list(vertices_of(y)) for y in self.Y],
            'W': list(vertices_of(self.W)),
            'Z': list(vertices_of(self.Z))
            }

    @classmethod
    def build(cls, g: Graph, Y: Sequence[VertexSet], W: VertexSet, Z: VertexSet) -> 'UncrossPartition':
        return cls(tuple(as_mask(y, g.n) for y in Y), as_mask(W, g.n), as_mask(Z, g.n))


def _sigma(g: Graph, part: UncrossPartition) -> int:
    label = part.labels(g.n)
    total = 0
    for u, v, w in g.edges:
        a, b = label[u], label[v]
        if a == b:
            continue
        if a >= 0 and b >= 0:
            total += 2 * w
        elif a < 0 and b < 0:
            total += 2 * w
        else:
            total += w
    return total

def sigma(g: Graph, part: UncrossPartition) -> int:
    ''' Edges between distinct Y_i, Y_j and between W and Z count twice,
    edges between some Y_i and W ∪ Z count once.

    Args:
        g (Graph): graph
        part (UncrossPartition): partition of V into non-empty parts

    Returns:
        int
    '''

    part.validate(g)
    return _sigma(g, part)

def check_inequality_1(g: Graph, part: UncrossPartition) -> bool:
    ''' Σ_i d(Y_i) <= σ(Y_1, ..., Y_p, W, Z) '''
    return sum(g.boundary(y) for y in part.Y) <= sigma(g, part)

def build_uncross_partition(g: Graph, A: Sequence[VertexSet]) -> UncrossPartition:
    ''' Z = ∩ V∖A_i, W = ∪_{i<j} (A_i ∩ A_j), Y_i = A_i ∖ W. Parts may be empty. '''

    masks = [as_mask(a, g.n) for a in A]
    if len(masks) < 2:
        raise DomainError(f'uncrossing needs at least two sets, got {len(masks)}')

    union = overlap = 0
    for a in masks:
        overlap |= union & a
        union |= a
    return UncrossPartition(Y=tuple(a & ~overlap for a in masks), W=overlap, Z=g.full & ~union)

def check_submodularity(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    ''' d(A) + d(B) >= d(A ∩ B) + d(A ∪ B), with d(∅) = d(V) = 0 '''
    a, b = as_mask(a, g.n), as_mask(b, g.n)
    return g.boundary(a) + g.boundary(b) >= g.boundary(a & b) + g.boundary(a | b)

def check_symmetry(g: Graph, a: VertexSet) -> bool:
    a = as_mask(a, g.n)
    return g.boundary(a) == g.boundary(g.full & ~a)
