from collections import defaultdict
from itertools import product
from typing import Dict, List, Tuple

from ..graphs.types import vertices_of
from .register import PAIR_FILTERS

__all__ = ['PAIR_FILTERS', 'PairFilter']


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class PairFilter:
    ''' Hook consulted by the pair scan before each flow computation.

    `skip` may only return True for pairs whose minimum terminal cut is
    already known to be collected. Filters with `needs_uniqueness` receive
    the full result (both residual sweeps) through `record`.
    '''

    needs_uniqueness = False

    def skip(self, source: int, sink: int) -> bool:
        return False

    def record(self, source: int, sink: int, side: int, unique: bool) -> None:
        pass


@PAIR_FILTERS.register()
class NoFilter(PairFilter):
    ''' Scan every pair '''


@PAIR_FILTERS.register()
class SubsumedPairFilter(PairFilter):
    ''' Skip (S, T) when an earlier pair (S', T') with S' ⊆ S and T' ⊆ T had
    a unique minimum cut U with S ⊆ U and T ∩ U = ∅: every (S,T)-terminal
    cut is an (S',T')-terminal cut, so U is also the unique minimum for (S,T).
    '''

    needs_uniqueness = True

    def __init__(self) -> None:
        # (lowest vertex of S', lowest vertex of T') -> [(S', T', U)]
        self._known: Dict[Tuple[int, int], List[Tuple[int, int, int]]] = defaultdict(list)
        self.skipped = 0

    def skip(self, source: int, sink: int) -> bool:
        for key in product(vertices_of(source), vertices_of(sink)):
            for s_known, t_known, side in self._known.get(key, ()):
                if (s_known & ~source == 0 and t_known & ~sink == 0
                        and source & ~side == 0 and sink & side == 0):
                    self.skipped += 1
                    return True
        return False

    def record(self, source: int, sink: int, side: int, unique: bool) -> None:
        if unique:
            key = (_lowest(source), _lowest(sink))
            self._known[key].append((source, sink, side))
