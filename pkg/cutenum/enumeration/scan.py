import logging
import math

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Set, Tuple, Union

from ..errors import BudgetExceededError, DomainError, InternalInvariantError
from ..flows.terminal import TerminalCutSolver, TerminalPair, global_min_cut
from ..graphs.graph import Cut, Graph, canonicalize, require_connected
from ..utils.timer import timer
from ..utils.useful_funcs import format_fraction
from .register import PAIR_FILTERS
from . import filters  # noqa: F401  (registers the filters)

__all__ = [
    'DEFAULT_BUDGET', 'EnumerationResult', 'parse_alpha', 'check_alpha', 'terminal_size_bound', 
    'within_alpha', 'pair_count', 'count_bound_holds', 'iter_pairs', 'enumerate_approx_min_cuts'
    ]

logger = logging.getLogger('cutenum.enumeration')

DEFAULT_BUDGET = 10**8

AlphaLike = Union[Fraction, int, str]


def parse_alpha(alpha: AlphaLike) -> Fraction:
    ''' Exact rational from "p/q", a decimal string, an int or a Fraction '''
    if isinstance(alpha, float):
        raise DomainError('alpha must be given exactly (str, int or Fraction), not as a float')
    try:
        return Fraction(alpha)
    except (ValueError, ZeroDivisionError, TypeError):
        raise DomainError(f'alpha must be a rational like "3/2" or "1.5", got {alpha!r}') from None

def check_alpha(alpha: AlphaLike) -> Fraction:
    alpha = parse_alpha(alpha)
    if alpha < 1:
        raise DomainError(f'alpha must be at least 1, got {format_fraction(alpha)}')
    return alpha

def terminal_size_bound(alpha: Fraction) -> int:
    ''' ⌊2α⌋ + 1, exactly '''
    alpha = Fraction(alpha)
    return (2 * alpha.numerator) // alpha.denominator + 1

def within_alpha(value: int, alpha: Fraction, lam: int) -> bool:
    ''' value <= α·λ, compared as q·value <= p·λ '''
    return alpha.denominator * value <= alpha.numerator * lam

def pair_count(n: int, k: int) -> int:
    ''' Number of ordered disjoint (S, T) with 1 <= |S|, |T| <= k '''
    return sum(math.comb(n, s) * math.comb(n - s, t)
        for s in range(1, min(k, n) + 1) for t in range(1, min(k, n - s) + 1))

def count_bound_holds(n: int, alpha: Fraction, count: int) -> bool:
    ''' count <= n^(4α+2), i.e. count^q <= n^(4p+2q) for α = p/q '''
    alpha = Fraction(alpha)
    p, q = alpha.numerator, alpha.denominator
    if n < 2 or count <= 1:
        return count <= 1
    whole = p // q
    # n^(4⌊α⌋+2) <= n^(4α+2) <= n^(4⌊α⌋+6)
    if count <= n ** (4 * whole + 2):
        return True
    if count > n ** (4 * whole + 6):
        return False
    # compare logarithms, exact powers only when too close for floats
    gap = math.log(count) - float(4 * alpha + 2) * math.log(n)
    if abs(gap) > 1e-9 * math.log(count):
        return gap < 0
    return count ** q <= n ** (4 * p + 2 * q)


def _subsets(vertices: List[int], size: int) -> Iterator[int]:
    for combo in combinations(vertices, size):
        mask = 0
        for v in combo:
            mask |= 1 << v
        yield mask

def iter_pairs(n: int, k: int) -> Iterator[Tuple[int, int]]:
    ''' All ordered disjoint (S, T) with sizes in [1, k], by ascending
    |S| + |T|, then |S|, then lexicographic S and T '''
    vertices = list(range(n))
    for total in range(2, min(2 * k, n) + 1):
        for s in range(max(1, total - k), min(k, total - 1) + 1):
            t = total - s
            for source in _subsets(vertices, s):
                rest = [v for v in vertices if not (source >> v) & 1]
                for sink in _subsets(rest, t):
                    yield source, sink

def _pairs_for_sources(n: int, k: int, sources: Iterable[int]) -> Iterator[Tuple[int, int]]:
    vertices = list(range(n))
    for source in sources:
        rest = [v for v in vertices if not (source >> v) & 1]
        for t in range(1, min(k, len(rest)) + 1):
            for sink in _subsets(rest, t):
                yield source, sink


@dataclass
class EnumerationResult:
    ''' Every canonical cut with value <= α·λ, sorted by (value, side) '''

    alpha: Fraction
    lam: int
    cuts: Tuple[Cut, ...]
    pairs_scanned: int
    flow_calls: int
    n: int
    k: int
    skipped: int = 0

    @property
    def sides(self) -> Set[int]:
        return {c.side for c in self.cuts}

    def __len__(self) -> int:
        return len(self.cuts)


def _scan(g: Graph, pairs: Iterable[Tuple[int, int]], alpha: Fraction, lam: int,
    engine: str, filter_name: str) -> Tuple[Set[Cut], int, int, int]:
    ''' Scan a stream of pairs, returning (cuts, pairs, flow calls, skipped) '''

    solver = TerminalCutSolver(g, engine=engine)
    pair_filter = PAIR_FILTERS.build(filter_name)
    found: Set[Cut] = set()
    seen_sides: Set[int] = set()
    scanned = skipped = 0

    for source, sink in pairs:
        scanned += 1
        if pair_filter.skip(source, sink):
            skipped += 1
            continue

        if pair_filter.needs_uniqueness:
            result = solver.solve(TerminalPair(source, sink))
            value, side = result.value, result.source_min_side
            pair_filter.record(source, sink, side, result.unique)
        else:
            value, side = solver.source_min_side(source, sink)

        if side in seen_sides or not within_alpha(value, alpha, lam):
            continue
        seen_sides.add(side)
        found.add(canonicalize(g, side))

    return found, scanned, solver.flow_calls, skipped

def _scan_sources(args) -> Tuple[Set[Cut], int, int, int]:
    g, k, sources, alpha, lam, engine, filter_name = args
    return _scan(g, _pairs_for_sources(g.n, k, sources), alpha, lam, engine, filter_name)

def _chunks(items: List[int], size: int) -> Iterator[List[int]]:
    for i in range(0, len(items), size):
        yield items[i:i + size]

@timer('enumeration')
def enumerate_approx_min_cuts(
    g: Graph, 
    alpha: AlphaLike,
    engine: str = 'Dinic',
    budget: Optional[int] = DEFAULT_BUDGET,
    force: bool = False,
    workers: int = 1,
    pair_filter: str = 'NoFilter'
    ) -> EnumerationResult:
    ''' Enumerate every α-approximate minimum cut.

    For every ordered pair of disjoint terminal sets with |S|, |T| <= ⌊2α⌋+1
    the source-minimal minimum (S,T)-terminal cut is computed and kept when
    its value is at most α·λ. A cut that is the unique minimum for some pair
    equals that pair's source-minimal minimum, so every α-approximate cut is
    collected; the value filter keeps nothing else.

    Args:
        g (Graph): connected graph
        alpha (Fraction, int or str): approximation factor >= 1, exact
        engine (str, optional): flow engine name. Defaults to 'Dinic'.
        budget (int, optional): refuse scans over this many pairs, None 
            disables the guard. Defaults to 10**8.
        force (bool, optional): ignore the budget. Defaults to False.
        workers (int, optional): worker processes for the scan. Defaults to 1.
        pair_filter (str, optional): registered pair filter name. 
            Defaults to 'NoFilter'.

    Returns:
        EnumerationResult
    '''

    assert isinstance(g, Graph), f'g must be a Graph instance, got {type(g)}'
    assert isinstance(workers, int) and workers >= 1, f'workers must be a positive integer, got {workers}'

    alpha = check_alpha(alpha)
    require_connected(g)
    if pair_filter not in PAIR_FILTERS:
        raise DomainError(f'unknown pair filter {pair_filter!r}, choose from {PAIR_FILTERS.registry_names}')

    n = g.n
    k = terminal_size_bound(alpha)
    total_pairs = pair_count(n, k)
    if budget is not None and total_pairs > budget and not force:
        raise BudgetExceededError(total_pairs, budget)

    lam_solver = TerminalCutSolver(g, engine=engine)
    lam = global_min_cut(g, solver=lam_solver).lam
    logger.info(f'lambda={lam}, k={k}, scanning {total_pairs} terminal pairs with {workers} worker(s)')

    if workers == 1:
        found, scanned, calls, skipped = _scan(g, iter_pairs(n, k), alpha, lam, engine, pair_filter)
    else:
        sources = [s for size in range(1, k + 1) for s in _subsets(list(range(n)), size)]
        chunk_size = max(1, math.ceil(len(sources) / (workers * 4)))
        tasks = [(g, k, chunk, alpha, lam, engine, pair_filter) for chunk in _chunks(sources, chunk_size)]
        found, scanned, calls, skipped = set(), 0, 0, 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part, part_scanned, part_calls, part_skipped in pool.map(_scan_sources, tasks):
                found |= part
                scanned += part_scanned
                calls += part_calls
                skipped += part_skipped

    cuts = tuple(sorted(found, key=lambda c: c.sort_key))
    if not count_bound_holds(n, alpha, len(cuts)):
        raise InternalInvariantError(f'{len(cuts)} cuts exceed the n^(4α+2) bound')

    logger.info(f'{len(cuts)} cuts found, {calls + lam_solver.flow_calls} flow calls, {skipped} pairs skipped')
    return EnumerationResult(
        alpha=alpha, lam=lam, cuts=cuts, pairs_scanned=scanned,
        flow_calls=calls + lam_solver.flow_calls, n=n, k=k, skipped=skipped
        )
