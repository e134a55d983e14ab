import networkx
import pytest

from functools import reduce
from hypothesis import given, settings, strategies as st

from cutenum.enumeration import brute_force_min_terminal_cuts
from cutenum.errors import DisconnectedGraphError, DomainError
from cutenum.flows import FLOW_ENGINES, TerminalCutSolver, TerminalPair, global_min_cut, \
    is_unique_min_terminal_cut, min_terminal_cut
from cutenum.graphs import Graph, complete_graph, cycle_graph, random_connected_graph

from strategies import connected_graphs

ENGINES = FLOW_ENGINES.registry_names


@pytest.mark.parametrize('engine', ENGINES)
def test_path_terminal_cut_is_not_unique(p3, engine):
    result = min_terminal_cut(p3, ({0}, {2}), engine=engine)
    assert result.value == 1
    assert result.source_min_side == 0b001
    assert result.source_max_side == 0b011
    assert not result.unique

@pytest.mark.parametrize('engine', ENGINES)
def test_cycle_terminal_cut_extremes(c4, engine):
    result = min_terminal_cut(c4, ({0}, {2}), engine=engine)
    assert result.value == 2
    assert result.source_min_side == 0b0001
    assert result.source_max_side == 0b1011

@pytest.mark.parametrize('engine', ENGINES)
def test_global_min_cut_examples(k3, weighted_triangle, engine):
    assert global_min_cut(k3, engine=engine).lam == 2
    result = global_min_cut(weighted_triangle, engine=engine)
    assert result.lam == 3
    assert result.witness.vertices == (1,)
    assert result.flow_calls == 2

def test_unique_terminal_cut(p3):
    assert is_unique_min_terminal_cut(p3, ({0}, {1}), {0})
    assert not is_unique_min_terminal_cut(p3, ({0}, {2}), {0})
    assert is_unique_min_terminal_cut(p3, ({0}, {1, 2}), {0})
    with pytest.raises(DomainError):
        is_unique_min_terminal_cut(p3, ({0}, {2}), {1})
    with pytest.raises(DomainError):
        is_unique_min_terminal_cut(p3, ({0}, {2}), {0, 2})

def test_terminal_pair_validation(p3):
    pair = TerminalPair.build(p3, ([0], [1, 2]))
    assert pair.S == (0,)
    assert pair.T == (1, 2)
    for bad in [(set(), {1}), ({0}, set()), ({0, 1}, {1}), ({0}, {5})]:
        with pytest.raises(DomainError):
            min_terminal_cut(p3, bad)

def test_solver_rejects_disconnected_graphs_and_unknown_engines(p3):
    with pytest.raises(DisconnectedGraphError):
        TerminalCutSolver(Graph(3, [(0, 1, 1)]))
    with pytest.raises(DomainError):
        TerminalCutSolver(p3, engine='FordFulkerson')

def test_flow_calls_are_counted():
    g = cycle_graph(6)
    solver = TerminalCutSolver(g)
    global_min_cut(g, solver=solver)
    assert solver.flow_calls == 5
    solver.solve(TerminalPair(1, 8))
    assert solver.flow_calls == 6

def test_merged_terminal_capacities():
    # S = {0, 1} and T = {3}; the edges 0-2 and 1-2 become one arc of weight 5
    g = Graph(4, [(0, 2, 2), (1, 2, 3), (2, 3, 4), (0, 1, 9)])
    result = min_terminal_cut(g, ({0, 1}, {3}))
    assert result.value == 4
    assert result.source_min_side == 0b0111
    assert result.unique

@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=9), st.data())
def test_matches_brute_force_extremes(g, data):
    source = data.draw(st.integers(min_value=1, max_value=g.full - 1))
    free = g.full & ~source
    sink = data.draw(st.integers(min_value=1, max_value=g.full)) & free
    sink = sink or free & -free

    value, sides = brute_force_min_terminal_cuts(g, source, sink)
    for engine in ENGINES:
        result = min_terminal_cut(g, (source, sink), engine=engine)
        assert result.value == value
        assert result.source_min_side == reduce(lambda a, b: a & b, sides)
        assert result.source_max_side == reduce(lambda a, b: a | b, sides)
        assert result.unique == (len(sides) == 1)

@pytest.mark.parametrize('seed', range(15))
def test_matches_networkx(seed):
    g = random_connected_graph(6 + seed % 8, seed=seed, density=0.4)
    nx_graph = g.to_networkx()

    cut_value, _ = networkx.stoer_wagner(nx_graph)
    for engine in ENGINES:
        assert global_min_cut(g, engine=engine).lam == cut_value

    for t in range(1, g.n):
        expected, _ = networkx.minimum_cut(nx_graph, 0, t)
        assert min_terminal_cut(g, ({0}, {t})).value == expected

def test_engines_agree_on_dense_graph():
    g = complete_graph(9, weight=3)
    values = {engine: min_terminal_cut(g, ({0, 1}, {7, 8}), engine=engine).value for engine in ENGINES}
    assert set(values.values()) == {2 * 7 * 3}
