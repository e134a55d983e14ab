import logging
import numpy

from typing import Optional, Set

from ..errors import DomainError
from ..flows.terminal import global_min_cut
from ..graphs.graph import Cut, Graph, canonicalize, require_connected
from ..utils.seed import make_rng
from .scan import AlphaLike, check_alpha, within_alpha

__all__ = ['contraction_baseline']

logger = logging.getLogger('cutenum.enumeration')


class _UnionFind:
    __slots__ = ['parent', 'rank', 'num_components']

    def __init__(self, n: int) -> None:
        self.parent = numpy.arange(n, dtype=int)
        self.rank = numpy.zeros(n, dtype=int)
        self.num_components = n

    def find(self, i: int) -> int:
        root = i
        while root != self.parent[root]:
            root = self.parent[root]
        while i != root:
            self.parent[i], i = root, self.parent[i]
        return int(root)

    def union(self, i: int, j: int) -> bool:
        root_i, root_j = self.find(i), self.find(j)
        if root_i == root_j:
            return False
        if self.rank[root_i] < self.rank[root_j]:
            root_i, root_j = root_j, root_i
        self.parent[root_j] = root_i
        if self.rank[root_i] == self.rank[root_j]:
            self.rank[root_i] += 1
        self.num_components -= 1
        return True


def _contract_to_two(g: Graph, us: numpy.ndarray, vs: numpy.ndarray, 
    probs: numpy.ndarray, rng: numpy.random.Generator) -> int:
    ''' One contraction run; returns the side not holding vertex 0 '''

    uf = _UnionFind(g.n)
    batch_size = max(16, 2 * (g.n - 2))
    while uf.num_components > 2:
        # sampling over all edges and rejecting contracted ones is
        # weight-proportional sampling among the surviving edges
        for idx in rng.choice(len(probs), size=batch_size, p=probs):
            if uf.union(int(us[idx]), int(vs[idx])) and uf.num_components <= 2:
                break

    root = uf.find(0)
    side = 0
    for v in range(g.n):
        if uf.find(v) != root:
            side |= 1 << v
    return side

def contraction_baseline(
    g: Graph, 
    alpha: AlphaLike, 
    trials: int, 
    seed: int,
    lam: Optional[int] = None
    ) -> Set[Cut]:
    ''' α-approximate cuts hit by repeated random contraction.

    Each trial contracts weight-proportionally sampled edges until two
    super-vertices remain and keeps the resulting cut if its value is at
    most α·λ. Deterministic for a given seed; no completeness guarantee.

    Args:
        g (Graph): connected graph
        alpha (Fraction, int or str): approximation factor >= 1
        trials (int): number of contraction runs, at least 1
        seed (int): random seed
        lam (int, optional): precomputed λ. Defaults to None.

    Returns:
        set of Cut
    '''

    if not isinstance(trials, int) or trials < 1:
        raise DomainError(f'trials must be a positive integer, got {trials!r}')
    alpha = check_alpha(alpha)
    require_connected(g)
    if lam is None:
        lam = global_min_cut(g).lam

    edges = numpy.array(g.edges, dtype=object).reshape(-1, 3)
    us, vs = edges[:, 0].astype(int), edges[:, 1].astype(int)
    weights = numpy.array([float(w) for _, _, w in g.edges])
    probs = weights / weights.sum()

    rng = make_rng(seed)
    found = set()
    for _ in range(trials):
        cut = canonicalize(g, _contract_to_two(g, us, vs, probs, rng))
        if within_alpha(cut.value, alpha, lam):
            found.add(cut)

    logger.debug(f'contraction baseline: {len(found)} distinct cuts in {trials} trials')
    return found
