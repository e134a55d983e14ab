import networkx

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Tuple

from ..errors import DomainError, DisconnectedGraphError
from .types import VertexSet, as_mask, check_weight, full_mask, vertices_of

__all__ = ['Graph', 'Cut', 'cut_value', 'canonicalize', 'is_connected', 'require_connected']


class Graph:
    ''' Immutable weighted undirected graph with exact integer weights.

    Parallel edges are merged by summing their weights and self-loops are
    dropped, as neither changes any cut value. Weights are positive integers;
    `scale` records the power of ten the input weights were multiplied by.

    Args:
        n (int): number of vertices, ids are 0..n-1
        edges (iterable): (u, v, w) triples with integer w > 0
        scale (int, optional): weight scale factor. Defaults to 1.
    '''

    def __init__(self, n: int, edges: Iterable[Tuple[int, int, int]], scale: int = 1) -> None:

        assert isinstance(n, int) and n >= 1, f'n must be a positive integer, got {n!r}'
        assert isinstance(scale, int) and scale >= 1, f'scale must be a positive integer, got {scale!r}'

        merged: Dict[Tuple[int, int], int] = {}
        for u, v, w in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f'edge ({u}, {v}) has an endpoint outside [0, {n})')
            if not isinstance(w, int) or isinstance(w, bool) or w <= 0:
                raise DomainError(f'edge ({u}, {v}) needs a positive integer weight, got {w!r}')
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            merged[key] = check_weight(merged.get(key, 0) + w, f'weight of edge {key}')

        self.n = n
        self.scale = scale
        self.edges: Tuple[Tuple[int, int, int], ...] = tuple(
            (u, v, w) for (u, v), w in sorted(merged.items()))
        self.total_weight = check_weight(sum(w for _, _, w in self.edges), 'total edge weight')

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def boundary(self, mask: int) -> int:
        ''' d(mask) with the convention d(∅) = d(V) = 0 '''
        total = 0
        for u, v, w in self.edges:
            if ((mask >> u) ^ (mask >> v)) & 1:
                total += w
        return total

    @cached_property
    def connected(self) -> bool:
        return networkx.is_connected(self.to_networkx())

    @cached_property
    def _nx(self) -> networkx.Graph:
        graph = networkx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_weighted_edges_from(self.edges)
        for u, v, w in self.edges:
            graph[u][v]['capacity'] = w
        return graph

    def to_networkx(self) -> networkx.Graph:
        ''' Cached networkx view, edges carry `weight` and `capacity` '''
        return self._nx

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.scale, self.edges) == (other.n, other.scale, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.scale, self.edges))

    def __getstate__(self) -> dict:
        return dict(n=self.n, edges=self.edges, scale=self.scale)

    def __setstate__(self, state: dict) -> None:
        self.__init__(state['n'], state['edges'], state['scale'])

    def __repr__(self) -> str:
        return f'Graph(n: {self.n}, m: {self.m}, scale: {self.scale})'


@dataclass(frozen=True)
class Cut:
    ''' A cut (U, V∖U) stored by its side NOT containing vertex 0 '''

    side: int
    value: int

    @property
    def vertices(self) -> Tuple[int, ...]:
        return vertices_of(self.side)

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.value, self.vertices)

    def as_dict(self) -> dict:
        return {'side': list(self.vertices), 'value': self.value}

    def __repr__(self) -> str:
        return f'Cut(side: {set(self.vertices)}, value: {self.value})'


def _proper_mask(g: Graph, side: VertexSet) -> int:
    if g.n < 2:
        raise DomainError('cut operations need at least 2 vertices')
    mask = as_mask(side, g.n)
    if mask == 0 or mask == g.full:
        raise DomainError('a cut side must be a non-empty proper subset of V')
    return mask

def cut_value(g: Graph, side: VertexSet) -> int:
    ''' Total weight of the edges with exactly one endpoint in `side` '''
    return g.boundary(_proper_mask(g, side))

def canonicalize(g: Graph, side: VertexSet) -> Cut:
    ''' Canonical form of the cut (side, V∖side): the side excluding vertex 0 '''
    mask = _proper_mask(g, side)
    if mask & 1:
        mask = g.full & ~mask
    return Cut(side=mask, value=g.boundary(mask))

def is_connected(g: Graph) -> bool:
    return g.connected

def require_connected(g: Graph) -> None:
    if g.n < 2:
        raise DomainError('cut operations need at least 2 vertices')
    if not g.connected:
        raise DisconnectedGraphError('the graph is not connected')
