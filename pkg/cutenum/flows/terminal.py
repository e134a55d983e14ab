import logging

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from ..errors import DomainError, InternalInvariantError
from ..graphs.graph import Cut, Graph, canonicalize, require_connected
from ..graphs.types import VertexSet, as_mask, vertices_of
from .register import FLOW_ENGINES
from . import engines  # noqa: F401  (registers the engines)

__all__ = [
    'TerminalPair', 'TerminalCutResult', 'GlobalMinCut', 'TerminalCutSolver',
    'min_terminal_cut', 'is_unique_min_terminal_cut', 'global_min_cut'
    ]

logger = logging.getLogger('cutenum.flows')

SOURCE, SINK = 0, 1


@dataclass(frozen=True)
class TerminalPair:
    ''' Terminal sets (S, T) as bitsets: non-empty, disjoint '''

    source: int
    sink: int

    @classmethod
    def build(cls, g: Graph, pair: Union['TerminalPair', Tuple[VertexSet, VertexSet]]) -> 'TerminalPair':
        if isinstance(pair, TerminalPair):
            source, sink = pair.source, pair.sink
        else:
            source, sink = pair
        source = as_mask(source, g.n)
        sink = as_mask(sink, g.n)
        if source == 0 or sink == 0:
            raise DomainError('terminal sets must be non-empty')
        if source & sink:
            raise DomainError(
                f'terminal sets overlap on {set(vertices_of(source & sink))}')
        return cls(source, sink)

    @property
    def S(self) -> Tuple[int, ...]:
        return vertices_of(self.source)

    @property
    def T(self) -> Tuple[int, ...]:
        return vertices_of(self.sink)


@dataclass(frozen=True)
class TerminalCutResult:
    ''' Minimum (S,T)-terminal cut with its extreme source sides.

    `source_min_side` is contained in the source side of every minimum
    (S,T)-terminal cut, `source_max_side` contains all of them.
    '''

    value: int
    source_min_side: int
    source_max_side: int

    @property
    def unique(self) -> bool:
        return self.source_min_side == self.source_max_side


@dataclass(frozen=True)
class GlobalMinCut:
    ''' λ and a canonical cut achieving it '''

    lam: int
    witness: Cut
    flow_calls: int = 0


class TerminalCutSolver:
    ''' Minimum (S,T)-terminal cuts on one graph.

    S and T are contracted virtually: the flow network has a source node for
    S, a sink node for T and one node per remaining vertex, every undirected
    edge becoming two opposite arcs of its full weight. Each solver owns its
    scratch state, use one per worker.

    Args:
        g (Graph): connected graph
        engine (str, optional): registered flow engine name. Defaults to 'Dinic'.
        check (bool, optional): verify flow value against the extracted cut 
            values on every call. Defaults to True.
    '''

    def __init__(self, g: Graph, engine: str = 'Dinic', check: bool = True) -> None:

        assert isinstance(g, Graph), \
            f'g must be a Graph instance, got {type(g)}'

        require_connected(g)
        self.g = g
        self.engine = engine
        if engine not in FLOW_ENGINES:
            raise DomainError(f'unknown flow engine {engine!r}, choose from {FLOW_ENGINES.registry_names}')
        self.engine_cls = FLOW_ENGINES[engine]
        self.check = check
        self.flow_calls = 0

    def _network(self, source: int, sink: int):
        g = self.g
        node = [0] * g.n
        next_id = 2
        for v in range(g.n):
            bit = 1 << v
            if source & bit:
                node[v] = SOURCE
            elif sink & bit:
                node[v] = SINK
            else:
                node[v] = next_id
                next_id += 1

        capacities = {}
        for u, v, w in g.edges:
            a, b = node[u], node[v]
            if a == b:
                continue
            key = (a, b) if a < b else (b, a)
            capacities[key] = capacities.get(key, 0) + w

        net = self.engine_cls(next_id)
        for (a, b), w in capacities.items():
            net.add_edge(a, b, w)
        return net, node

    def _side(self, flags, node) -> int:
        mask = 0
        for v, x in enumerate(node):
            if flags[x]:
                mask |= 1 << v
        return mask

    def source_min_side(self, source: int, sink: int) -> Tuple[int, int]:
        ''' (value, source-minimal side) for bitsets S, T. Single residual sweep. '''
        net, node = self._network(source, sink)
        value = net.max_flow(SOURCE, SINK)
        self.flow_calls += 1
        side = self._side(net.reachable_from(SOURCE), node)
        if self.check and self.g.boundary(side) != value:
            raise InternalInvariantError(
                f'max-flow {value} differs from the cut value {self.g.boundary(side)} '
                f'of the residual source side {vertices_of(side)}')
        return value, side

    def solve(self, pair: TerminalPair) -> TerminalCutResult:
        net, node = self._network(pair.source, pair.sink)
        value = net.max_flow(SOURCE, SINK)
        self.flow_calls += 1

        min_side = self._side(net.reachable_from(SOURCE), node)
        max_side = self.g.full & ~self._side(net.reaching(SINK), node)

        if self.check:
            g = self.g
            if g.boundary(min_side) != value or g.boundary(max_side) != value:
                raise InternalInvariantError(
                    f'max-flow {value} differs from residual cut values '
                    f'{g.boundary(min_side)} / {g.boundary(max_side)}')
            nested = (pair.source & ~min_side == 0 and min_side & ~max_side == 0
                and max_side & pair.sink == 0)
            if not nested:
                raise InternalInvariantError('residual sides are not nested between S and V∖T')

        return TerminalCutResult(value, min_side, max_side)


def min_terminal_cut(
    g: Graph, 
    pair: Union[TerminalPair, Tuple[VertexSet, VertexSet]],
    engine: str = 'Dinic'
    ) -> TerminalCutResult:
    ''' Minimum (S,T)-terminal cut with its source-minimal and source-maximal sides.

    Args:
        g (Graph): connected graph
        pair (TerminalPair or tuple): terminal sets (S, T)
        engine (str, optional): flow engine name. Defaults to 'Dinic'.

    Returns:
        TerminalCutResult
    '''

    solver = TerminalCutSolver(g, engine=engine)
    return solver.solve(TerminalPair.build(g, pair))

def is_unique_min_terminal_cut(
    g: Graph, 
    pair: Union[TerminalPair, Tuple[VertexSet, VertexSet]],
    u: VertexSet,
    engine: str = 'Dinic',
    solver: Optional[TerminalCutSolver] = None
    ) -> bool:
    ''' True iff (u, V∖u) is the unique minimum (S,T)-terminal cut '''

    pair = TerminalPair.build(g, pair)
    u = as_mask(u, g.n)
    if pair.source & ~u or u & pair.sink:
        raise DomainError('u must contain S and avoid T')

    if solver is None:
        solver = TerminalCutSolver(g, engine=engine)
    result = solver.solve(pair)
    return result.unique and result.source_min_side == u

def global_min_cut(g: Graph, engine: str = 'Dinic', solver: Optional[TerminalCutSolver] = None) -> GlobalMinCut:
    ''' λ as the best ({v0}, {t})-terminal cut over all t != v0 '''

    if solver is None:
        solver = TerminalCutSolver(g, engine=engine)
    calls = solver.flow_calls

    best_value, best_side = None, None
    for t in range(1, g.n):
        value, side = solver.source_min_side(1, 1 << t)
        if best_value is None or value < best_value:
            best_value, best_side = value, side

    witness = canonicalize(g, best_side)
    logger.debug(f'lambda={best_value} witnessed by {witness}')
    return GlobalMinCut(lam=best_value, witness=witness, flow_calls=solver.flow_calls - calls)
