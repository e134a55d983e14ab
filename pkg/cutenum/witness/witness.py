import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from ..errors import DomainError, InternalInvariantError
from ..flows.terminal import TerminalCutSolver, global_min_cut, is_unique_min_terminal_cut
from ..graphs.graph import Graph, require_connected
from ..graphs.types import VertexSet, as_mask, popcount, vertices_of
from ..utils.useful_funcs import format_fraction

__all__ = [
    'Witness', 'ClaimRecord', 'find_one_sided_witness', 'find_witness', 'certifies_one_side',
    'check_size_bound', 'check_minimal', 'claim_report'
    ]

logger = logging.getLogger('cutenum.witness')


@dataclass(frozen=True)
class Witness:
    ''' Terminal sets S ⊆ U and T ⊆ V∖U for which (U, V∖U) is the unique 
    minimum (S,T)-terminal cut. Sets are bitsets. '''

    S: int
    T: int
    side: int
    value: int
    lam: int

    @property
    def alpha_of_cut(self) -> Fraction:
        return Fraction(self.value, self.lam)

    @property
    def size_bound(self) -> int:
        ''' ⌊2·d(U)/λ⌋ + 1 '''
        return (2 * self.value) // self.lam + 1

    def as_dict(self) -> dict:
        return {
            'S': list(vertices_of(self.S)),
            'T': list(vertices_of(self.T)),
            'U': list(vertices_of(self.side)),
            'value': self.value,
            'alpha_of_cut': format_fraction(self.alpha_of_cut),
            'size_bound': self.size_bound
            }


@dataclass(frozen=True)
class ClaimRecord:
    ''' One row of `claim_report`: A_i is the sink side of the source-minimal
    minimum (S∖{u_i}, V∖U)-terminal cut '''

    vertex: int
    A: int
    value: int
    holds: bool


def _proper(g: Graph, u: VertexSet) -> int:
    require_connected(g)
    mask = as_mask(u, g.n)
    if mask == 0 or mask == g.full:
        raise DomainError('the cut side must be a non-empty proper subset of V')
    return mask

def certifies_one_side(g: Graph, u: VertexSet, s: VertexSet, solver: Optional[TerminalCutSolver] = None) -> bool:
    ''' True iff (u, V∖u) is the unique minimum (s, V∖u)-terminal cut, 
    i.e. s hits every Q ⊋ V∖u with d(Q) <= d(u) '''
    u = _proper(g, u)
    return is_unique_min_terminal_cut(g, (s, g.full & ~u), u, solver=solver)

def find_one_sided_witness(
    g: Graph, 
    u: VertexSet, 
    engine: str = 'Dinic',
    solver: Optional[TerminalCutSolver] = None
    ) -> int:
    ''' Inclusion-minimal S ⊆ u certifying (u, V∖u) against V∖u.

    Starts from S = u and drops vertices in ascending id order whenever the
    cut stays the unique minimum (S∖{v}, V∖u)-terminal cut. Certification
    is monotone under adding terminals, so one pass gives a minimal set.

    Args:
        g (Graph): connected graph
        u (VertexSet): cut side, non-empty proper subset of V
        engine (str, optional): flow engine name. Defaults to 'Dinic'.
        solver (TerminalCutSolver, optional): shared solver. Defaults to None.

    Returns:
        int: bitset S
    '''

    u = _proper(g, u)
    if solver is None:
        solver = TerminalCutSolver(g, engine=engine)

    sink = g.full & ~u
    s = u
    for v in vertices_of(u):
        candidate = s & ~(1 << v)
        if candidate == 0:
            break
        if is_unique_min_terminal_cut(g, (candidate, sink), u, solver=solver):
            s = candidate
    return s

def find_witness(
    g: Graph, 
    u: VertexSet, 
    lam: Optional[int] = None, 
    engine: str = 'Dinic',
    solver: Optional[TerminalCutSolver] = None
    ) -> Witness:
    ''' Two-sided witness (S, T) for the cut (u, V∖u).

    S is the one-sided witness of u and T the one-sided witness of V∖u.
    The pair is re-checked before returning.

    Args:
        g (Graph): connected graph
        u (VertexSet): cut side
        lam (int, optional): precomputed λ. Defaults to None.
        engine (str, optional): flow engine name. Defaults to 'Dinic'.
        solver (TerminalCutSolver, optional): shared solver. Defaults to None.

    Returns:
        Witness
    '''

    u = _proper(g, u)
    if solver is None:
        solver = TerminalCutSolver(g, engine=engine)
    if lam is None:
        lam = global_min_cut(g, solver=solver).lam

    complement = g.full & ~u
    s = find_one_sided_witness(g, u, solver=solver)
    t = find_one_sided_witness(g, complement, solver=solver)

    if not is_unique_min_terminal_cut(g, (s, t), u, solver=solver):
        raise InternalInvariantError(
            f'witness S={vertices_of(s)}, T={vertices_of(t)} does not certify U={vertices_of(u)}')

    witness = Witness(S=s, T=t, side=u, value=g.boundary(u), lam=lam)
    logger.debug(f'witness for {vertices_of(u)}: |S|={popcount(s)}, |T|={popcount(t)}, '
        f'bound {witness.size_bound}')
    return witness

def check_size_bound(g: Graph, u: VertexSet, w: Witness) -> bool:
    ''' |S|, |T| <= ⌊2·d(u)/λ⌋ + 1, with the floor taken exactly '''
    u = _proper(g, u)
    bound = (2 * g.boundary(u)) // w.lam + 1
    return popcount(w.S) <= bound and popcount(w.T) <= bound

def check_minimal(g: Graph, u: VertexSet, s: VertexSet, solver: Optional[TerminalCutSolver] = None) -> bool:
    ''' True iff dropping any single vertex of s breaks the one-sided 
    certification (an empty remainder counts as broken) '''

    u = _proper(g, u)
    s = as_mask(s, g.n)
    if solver is None:
        solver = TerminalCutSolver(g)
    for v in vertices_of(s):
        candidate = s & ~(1 << v)
        if candidate and certifies_one_side(g, u, candidate, solver=solver):
            return False
    return True

def claim_report(g: Graph, u: VertexSet, s: VertexSet, solver: Optional[TerminalCutSolver] = None) -> List[ClaimRecord]:
    ''' For a minimal one-sided witness s with |s| >= 2, the sink side A_i of 
    the source-minimal minimum (s∖{u_i}, V∖u)-terminal cut must satisfy
    d(A_i) <= d(u) and u_i ∈ A_i. '''

    u = _proper(g, u)
    s = as_mask(s, g.n)
    if popcount(s) < 2:
        raise DomainError('claim report needs at least two terminals')
    if s & ~u:
        raise DomainError('terminals must lie inside the cut side')
    if solver is None:
        solver = TerminalCutSolver(g)

    d_u = g.boundary(u)
    sink = g.full & ~u
    records = []
    for v in vertices_of(s):
        value, source_side = solver.source_min_side(s & ~(1 << v), sink)
        a = g.full & ~source_side
        records.append(ClaimRecord(vertex=v, A=a, value=value, holds=value <= d_u and bool((a >> v) & 1)))
    return records
