import logging
import numpy
import pandas

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..errors import DomainError
from ..flows.terminal import TerminalCutSolver
from ..graphs.generators import cycle_graph, random_connected_graph
from ..graphs.graph import Graph, require_connected
from ..graphs.types import VertexSet, as_mask, popcount, vertices_of
from ..utils.seed import make_rng
from ..witness.witness import find_one_sided_witness
from .sigma import UncrossPartition, _sigma, build_uncross_partition

__all__ = ['Lemma1Report', 'HarvestRecord', 'HarvestResult', 'check_lemma1', 'harvest_lemma1', 'harvest_on_graph']

logger = logging.getLogger('cutenum.uncross')

HARVEST_MODES = ('random', 'witness', 'mixed')


@dataclass
class Lemma1Report:
    ''' Outcome of uncrossing the sink sides A_i of the source-minimal minimum
    ((s ∪ r)∖{u_i}, V∖u)-terminal cuts.

    Partition data is only filled in when every u_i lies in A_i and in no
    other A_j.
    '''

    u: int
    r: int
    s: int
    A: List[int]
    d_A: List[int]
    hypothesis_holds: bool
    partition: Optional[UncrossPartition] = None
    sigma: Optional[int] = None
    pair_min: Optional[int] = None
    sum_dY: Optional[int] = None
    min_dY: Optional[int] = None

    @property
    def p(self) -> int:
        return len(self.A)

    @property
    def parts_nonempty(self) -> bool:
        return self.partition is not None and self.partition.nonempty

    @property
    def chain_holds(self) -> bool:
        ''' All p+2 parts non-empty and Σ d(Y_i) <= σ <= min_{i≠j} d(A_i) + d(A_j).
        Vacuously true when the hypothesis fails. '''
        if not self.hypothesis_holds:
            return True
        return self.parts_nonempty and self.sum_dY <= self.sigma <= self.pair_min

    def averaging_bound_holds(self, d_u: int) -> bool:
        ''' When every d(A_i) <= d_u: p·min_i d(Y_i) <= 2·d_u '''
        if not self.hypothesis_holds or any(d > d_u for d in self.d_A):
            return True
        return self.p * self.min_dY <= 2 * d_u

    def as_dict(self) -> dict:
        return {
            'u': list(vertices_of(self.u)),
            'r': list(vertices_of(self.r)),
            's': list(vertices_of(self.s)),
            'A': [list(vertices_of(a)) for a in self.A],
            'd_A': list(self.d_A),
            'hypothesis_holds': self.hypothesis_holds,
            'partition': self.partition.as_dict() if self.partition is not None else None,
            'sigma': self.sigma,
            'pair_min': self.pair_min,
            'sum_dY': self.sum_dY,
            'chain_holds': self.chain_holds
            }


def check_lemma1(
    g: Graph, 
    u: VertexSet, 
    r: VertexSet, 
    s: VertexSet,
    engine: str = 'Dinic',
    solver: Optional[TerminalCutSolver] = None
    ) -> Lemma1Report:
    ''' Run the uncrossing construction on a concrete instance.

    Requires ∅ ≠ r ⊊ u ⊊ V and s ⊆ u∖r with |s| >= 2. For each u_i ∈ s the
    source-minimal minimum ((s ∪ r)∖{u_i}, V∖u)-terminal cut (V∖A_i, A_i) is
    computed. When u_i ∈ A_i∖∪_{j≠i} A_j for every i, the partition
    Z = ∩ V∖A_i, W = ∪_{i<j} A_i ∩ A_j, Y_i = A_i∖W is built and σ, 
    min_{i≠j} d(A_i) + d(A_j) and Σ d(Y_i) are reported.

    Args:
        g (Graph): connected graph
        u (VertexSet): cut side
        r (VertexSet): non-empty proper subset of u
        s (VertexSet): at least two vertices of u∖r
        engine (str, optional): flow engine name. Defaults to 'Dinic'.
        solver (TerminalCutSolver, optional): shared solver. Defaults to None.

    Returns:
        Lemma1Report
    '''

    require_connected(g)
    u, r, s = as_mask(u, g.n), as_mask(r, g.n), as_mask(s, g.n)
    if u == 0 or u == g.full:
        raise DomainError('u must be a non-empty proper subset of V')
    if r == 0 or r & ~u or r == u:
        raise DomainError('r must be a non-empty proper subset of u')
    if s & ~(u & ~r):
        raise DomainError('s must lie inside u∖r')
    if popcount(s) < 2:
        raise DomainError(f's needs at least two vertices, got {popcount(s)}')

    if solver is None:
        solver = TerminalCutSolver(g, engine=engine)

    sink = g.full & ~u
    terminals = vertices_of(s)
    A, d_A = [], []
    for v in terminals:
        value, source_side = solver.source_min_side((s | r) & ~(1 << v), sink)
        A.append(g.full & ~source_side)
        d_A.append(value)

    holds = True
    for i, v in enumerate(terminals):
        bit = 1 << v
        if not A[i] & bit or any(A[j] & bit for j in range(len(A)) if j != i):
            holds = False
            break

    report = Lemma1Report(u=u, r=r, s=s, A=A, d_A=d_A, hypothesis_holds=holds)
    if not holds:
        return report

    partition = build_uncross_partition(g, A)
    dY = [g.boundary(y) for y in partition.Y]
    report.partition = partition
    report.sigma = _sigma(g, partition)
    report.pair_min = min(d_A[i] + d_A[j] for i, j in combinations(range(len(A)), 2))
    report.sum_dY = sum(dY)
    report.min_dY = min(dY)

    if not report.chain_holds:
        logger.warning(f'uncrossing chain violated on u={vertices_of(u)}, r={vertices_of(r)}, '
            f's={vertices_of(s)}: sum_dY={report.sum_dY}, sigma={report.sigma}, pair_min={report.pair_min}')
    return report


@dataclass
class HarvestRecord:
    trial: int
    mode: str
    graph: Graph
    report: Lemma1Report


@dataclass
class HarvestResult:
    ''' Hypothesis-holding Lemma1Reports gathered by a seeded search '''

    seed: int
    trials: int = 0
    records: List[HarvestRecord] = field(default_factory=list)

    @property
    def hits(self) -> int:
        return len(self.records)

    @property
    def violations(self) -> List[HarvestRecord]:
        return [rec for rec in self.records if not rec.report.chain_holds 
            or not rec.report.averaging_bound_holds(rec.graph.boundary(rec.report.u))]

    def frame(self) -> pandas.DataFrame:
        rows = []
        for rec in self.records:
            rep = rec.report
            d_u = rec.graph.boundary(rep.u)
            rows.append(dict(
                trial=rec.trial, mode=rec.mode, n=rec.graph.n, m=rec.graph.m, p=rep.p,
                r_size=popcount(rep.r), d_u=d_u, max_d_A=max(rep.d_A), sum_dY=rep.sum_dY,
                sigma=rep.sigma, pair_min=rep.pair_min, min_dY=rep.min_dY,
                parts_nonempty=rep.parts_nonempty, chain_holds=rep.chain_holds,
                averaging_holds=rep.averaging_bound_holds(d_u)
                ))
        return pandas.DataFrame(rows)


def _random_subset(rng: numpy.random.Generator, pool: Sequence[int], size: int) -> int:
    mask = 0
    for v in rng.choice(pool, size=size, replace=False):
        mask |= 1 << int(v)
    return mask

def _random_instance(g: Graph, rng: numpy.random.Generator, 
    p_choices: Sequence[int]) -> Optional[Tuple[int, int, int]]:
    ''' Uniform nested r ⊊ u and p-subset s of u∖r '''
    p = int(rng.choice(p_choices))
    if g.n < p + 2:
        return None
    u_size = int(rng.integers(p + 1, g.n))
    u = _random_subset(rng, list(range(g.n)), u_size)
    members = list(vertices_of(u))
    r = _random_subset(rng, members, int(rng.integers(1, u_size - p + 1)))
    s = _random_subset(rng, list(vertices_of(u & ~r)), p)
    return u, r, s

def _witness_instance(g: Graph, rng: numpy.random.Generator, p_choices: Sequence[int],
    solver: TerminalCutSolver) -> Optional[Tuple[int, int, int]]:
    ''' A minimal one-sided witness S of a random side u with |S| = p + 1,
    split as r = {max S}, s = S∖r '''
    u = _random_subset(rng, list(range(g.n)), int(rng.integers(1, g.n)))
    witness = find_one_sided_witness(g, u, solver=solver)
    if popcount(witness) - 1 not in p_choices:
        return None
    r = 1 << vertices_of(witness)[-1]
    return u, r, witness & ~r

def _sample(g: Graph, mode: str, rng, p_choices, solver) -> Optional[Tuple[int, int, int]]:
    if mode == 'random':
        return _random_instance(g, rng, p_choices)
    return _witness_instance(g, rng, p_choices, solver)

def _trial_mode(mode: str, trial: int) -> str:
    if mode == 'mixed':
        return 'witness' if trial % 2 == 0 else 'random'
    return mode

def _check_mode(mode: str) -> None:
    if mode not in HARVEST_MODES:
        raise DomainError(f'unknown harvest mode {mode!r}, choose from {HARVEST_MODES}')

def harvest_lemma1(
    seed: int = 0,
    target: int = 100,
    max_trials: int = 20000,
    n_range: Tuple[int, int] = (6, 10),
    p_choices: Sequence[int] = (2, 3),
    mode: str = 'mixed',
    engine: str = 'Dinic'
    ) -> HarvestResult:
    ''' Seeded search for hypothesis-holding instances of the uncrossing check.

    'random' draws weighted random graphs with uniform (u, r, s). 'witness'
    draws a random side u, on a unit cycle or a weighted random graph, and
    splits its minimal one-sided witness, which always satisfies the
    hypothesis. 'mixed' alternates both.

    Args:
        seed (int, optional): random seed. Defaults to 0.
        target (int, optional): stop after this many hits. Defaults to 100.
        max_trials (int, optional): trial budget. Defaults to 20000.
        n_range (tuple, optional): inclusive vertex count range. Defaults to (6, 10).
        p_choices (sequence, optional): allowed |s|. Defaults to (2, 3).
        mode (str, optional): 'random', 'witness' or 'mixed'. Defaults to 'mixed'.
        engine (str, optional): flow engine name. Defaults to 'Dinic'.

    Returns:
        HarvestResult
    '''

    _check_mode(mode)
    low, high = n_range
    if low < 4 or high < low:
        raise DomainError(f'n_range must satisfy 4 <= low <= high, got {n_range}')
    if not p_choices or min(p_choices) < 2:
        raise DomainError(f'p_choices must be values >= 2, got {p_choices}')

    rng = make_rng(seed)
    result = HarvestResult(seed=seed)
    for trial in range(max_trials):
        if result.hits >= target:
            break
        result.trials += 1

        trial_mode = _trial_mode(mode, trial)
        n = int(rng.integers(low, high + 1))
        graph_seed = int(rng.integers(2**31))
        if trial_mode == 'witness' and rng.random() < 0.5:
            g = cycle_graph(n)
        else:
            g = random_connected_graph(n, seed=graph_seed)

        solver = TerminalCutSolver(g, engine=engine)
        instance = _sample(g, trial_mode, rng, p_choices, solver)
        if instance is None:
            continue
        report = check_lemma1(g, *instance, solver=solver)
        if report.hypothesis_holds:
            result.records.append(HarvestRecord(trial, trial_mode, g, report))

    logger.info(f'harvest seed={seed}: {result.hits} hits in {result.trials} trials, '
        f'{len(result.violations)} violations')
    return result

def harvest_on_graph(
    g: Graph, 
    seed: int = 0, 
    trials: int = 1000, 
    p_choices: Sequence[int] = (2, 3),
    mode: str = 'mixed',
    engine: str = 'Dinic',
    target: Optional[int] = None
    ) -> HarvestResult:
    ''' Same search on one fixed graph, stopping after `target` hits if given '''

    _check_mode(mode)
    require_connected(g)
    rng = make_rng(seed)
    solver = TerminalCutSolver(g, engine=engine)
    result = HarvestResult(seed=seed)
    for trial in range(trials):
        if target is not None and result.hits >= target:
            break
        result.trials += 1
        trial_mode = _trial_mode(mode, trial)
        instance = _sample(g, trial_mode, rng, p_choices, solver)
        if instance is None:
            continue
        report = check_lemma1(g, *instance, solver=solver)
        if report.hypothesis_holds:
            result.records.append(HarvestRecord(trial, trial_mode, g, report))
    return result
