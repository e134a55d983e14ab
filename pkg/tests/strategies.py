from hypothesis import strategies as st

from cutenum.graphs import random_connected_graph


@st.composite
def connected_graphs(draw, min_n: int = 4, max_n: int = 10, max_weight: int = 10):
    ''' Seeded random connected graphs with integer weights in [1, max_weight] '''
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    density = draw(st.sampled_from([0.2, 0.4, 0.7]))
    return random_connected_graph(n, seed=seed, weight_range=(1, max_weight), density=density)

@st.composite
def vertex_subsets(draw, n: int, proper: bool = False):
    ''' Bitset of a subset of range(n), non-empty and proper if asked '''
    if proper:
        return draw(st.integers(min_value=1, max_value=(1 << n) - 2))
    return draw(st.integers(min_value=0, max_value=(1 << n) - 1))
