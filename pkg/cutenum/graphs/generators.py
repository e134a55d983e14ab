from typing import Optional, Tuple

from ..utils.seed import make_rng
from .graph import Graph

__all__ = [
    'path_graph', 'cycle_graph', 'complete_graph',
    'random_connected_graph', 'tightness_instance'
    ]

def path_graph(n: int, weight: int = 1) -> Graph:
    ''' v0 - v1 - ... - v(n-1) '''
    return Graph(n, [(i, i + 1, weight) for i in range(n - 1)])

def cycle_graph(n: int, weight: int = 1) -> Graph:
    ''' v0 - v1 - ... - v(n-1) - v0 '''
    assert n >= 3, f'a cycle needs at least 3 vertices, got {n}'
    return Graph(n, [(i, (i + 1) % n, weight) for i in range(n)])

def complete_graph(n: int, weight: int = 1) -> Graph:
    return Graph(n, [(u, v, weight) for u in range(n) for v in range(u + 1, n)])

def random_connected_graph(
    n: int, 
    seed: Optional[int] = None, 
    weight_range: Tuple[int, int] = (1, 10),
    density: float = 0.3
    ) -> Graph:
    ''' Random connected graph: a uniformly shuffled spanning tree, plus every
    other pair independently with probability `density`.

    Args:
        n (int): number of vertices (>= 2)
        seed (int, optional): generator seed. Defaults to None.
        weight_range (tuple, optional): inclusive integer weight bounds. 
            Defaults to (1, 10).
        density (float, optional): extra edge probability. Defaults to 0.3.

    Returns:
        Graph
    '''

    assert n >= 2, f'n must be at least 2, got {n}'
    low, high = weight_range
    assert 1 <= low <= high, f'wrong weight range {weight_range}'

    rng = make_rng(seed)
    order = rng.permutation(n)
    pairs = set()
    for i in range(1, n):
        parent = int(order[rng.integers(0, i)])
        child = int(order[i])
        pairs.add((min(parent, child), max(parent, child)))

    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in pairs and rng.random() < density:
                pairs.add((u, v))

    edges = [(u, v, int(rng.integers(low, high + 1))) for u, v in sorted(pairs)]
    return Graph(n, edges)

def tightness_instance(alpha: int = 4) -> Tuple[Graph, int]:
    ''' Unit cycle on 4·alpha vertices with U made of alpha arcs of two
    consecutive vertices, separated by arcs of two vertices of V∖U.

    d(U) = 2·alpha and λ = 2, and every vertex of U (resp. V∖U) is an end
    vertex of a cut edge, so both terminal sets of any certifying pair need
    all 2·alpha of them.

    Returns:
        Tuple[Graph, int]: the cycle and the bitset of U
    '''

    assert isinstance(alpha, int) and alpha >= 1, f'alpha must be a positive integer, got {alpha}'
    n = 4 * alpha
    u_mask = 0
    for j in range(alpha):
        u_mask |= (1 << (4 * j)) | (1 << (4 * j + 1))
    return cycle_graph(n), u_mask
