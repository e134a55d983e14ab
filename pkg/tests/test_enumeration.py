import pytest
import time

from fractions import Fraction
from hypothesis import given, settings

from cutenum.enumeration import brute_force_cuts, brute_force_lambda, brute_force_min_terminal_cuts, \
    contraction_baseline, count_bound_holds, enumerate_approx_min_cuts, iter_pairs, pair_count, \
    PAIR_FILTERS, parse_alpha, terminal_size_bound, within_alpha
from cutenum.errors import BudgetExceededError, DisconnectedGraphError, DomainError
from cutenum.graphs import Cut, Graph, complete_graph, path_graph, random_connected_graph

from strategies import connected_graphs

ALPHAS = [Fraction(1), Fraction(3, 2), Fraction(2)]


def test_complete_graph_min_cuts(k3):
    result = enumerate_approx_min_cuts(k3, 1)
    assert result.lam == 2
    assert [c.side for c in result.cuts] == [0b010, 0b110, 0b100]
    assert all(c.value == 2 for c in result.cuts)

def test_cycle_has_28_min_cuts(c8):
    result = enumerate_approx_min_cuts(c8, 1)
    assert len(result.cuts) == 28
    assert {c.value for c in result.cuts} == {2}
    assert set(result.cuts) == brute_force_cuts(c8, 1)

def test_path_with_alpha_two(p3):
    result = enumerate_approx_min_cuts(p3, 2)
    assert list(result.cuts) == [Cut(0b110, 1), Cut(0b100, 1), Cut(0b010, 2)]
    assert {(c.vertices, c.value) for c in result.cuts} == {((1, 2), 1), ((2,), 1), ((1,), 2)}

def test_cuts_are_sorted_by_value_then_side(p3):
    result = enumerate_approx_min_cuts(p3, 2)
    keys = [c.sort_key for c in result.cuts]
    assert keys == sorted(keys)
    assert keys[0] == (1, (1, 2))

def test_exact_rational_threshold():
    # λ = 2, α = 3/2: value 3 is in, value 4 is out
    g = Graph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 2, 1)])
    result = enumerate_approx_min_cuts(g, '3/2')
    assert result.lam == 2
    assert max(c.value for c in result.cuts) == 3
    assert set(result.cuts) == brute_force_cuts(g, Fraction(3, 2))
    assert enumerate_approx_min_cuts(g, '1.5').cuts == result.cuts

def test_alpha_parsing():
    assert parse_alpha('3/2') == Fraction(3, 2)
    assert parse_alpha('1.5') == Fraction(3, 2)
    assert parse_alpha(2) == 2
    assert terminal_size_bound(Fraction(3, 2)) == 4
    assert terminal_size_bound(Fraction(7, 4)) == 4
    assert terminal_size_bound(Fraction(2)) == 5
    assert within_alpha(3, Fraction(3, 2), 2)
    assert not within_alpha(4, Fraction(3, 2), 2)

@pytest.mark.parametrize('alpha', ['1/2', '0.99', 'abc', '1/0', 1.5])
def test_invalid_alpha(p3, alpha):
    with pytest.raises(DomainError):
        enumerate_approx_min_cuts(p3, alpha)

def test_disconnected_graph_is_rejected():
    g = Graph(4, [(0, 1, 1), (2, 3, 1)])
    with pytest.raises(DisconnectedGraphError):
        enumerate_approx_min_cuts(g, 1)
    with pytest.raises(DisconnectedGraphError):
        brute_force_cuts(g, 1)

def test_pair_count_and_order():
    assert pair_count(3, 1) == 6
    assert pair_count(4, 2) == len(list(iter_pairs(4, 2)))

    pairs = list(iter_pairs(5, 3))
    assert len(pairs) == len(set(pairs)) == pair_count(5, 3)
    assert all(s and t and not s & t for s, t in pairs)
    sizes = [(bin(s).count('1') + bin(t).count('1'), bin(s).count('1')) for s, t in pairs]
    assert sizes == sorted(sizes)
    assert pairs[0] == (0b1, 0b10)

def test_scan_statistics(c8):
    result = enumerate_approx_min_cuts(c8, 1)
    assert result.k == 3
    assert result.pairs_scanned == pair_count(8, 3)
    assert result.flow_calls == pair_count(8, 3) + 7
    assert count_bound_holds(8, result.alpha, len(result.cuts))

def test_count_bound():
    assert count_bound_holds(4, Fraction(1), 4**6)
    assert not count_bound_holds(4, Fraction(1), 4**6 + 1)
    # α = 3/2: count^2 <= n^(12 + 4)
    assert count_bound_holds(3, Fraction(3, 2), 3**8)
    assert not count_bound_holds(3, Fraction(3, 2), 3**8 + 1)

def test_count_bound_with_fine_alpha(k3):
    alpha = Fraction('1.0000000001')
    assert count_bound_holds(3, alpha, 3**6)
    assert not count_bound_holds(3, alpha, 3**6 + 1)
    assert count_bound_holds(10, Fraction('2.000001'), 10**10)

    start = time.perf_counter()
    result = enumerate_approx_min_cuts(k3, '1.0000000001')
    assert time.perf_counter() - start < 10
    assert len(result.cuts) == 3

def test_pair_count_when_k_exceeds_n():
    assert pair_count(3, 5) == 12
    assert pair_count(2, 5) == 2
    assert pair_count(3, 5) == len(list(iter_pairs(3, 5)))

def test_budget_guard():
    g = complete_graph(6)
    with pytest.raises(BudgetExceededError) as excinfo:
        enumerate_approx_min_cuts(g, 1, budget=10)
    assert excinfo.value.pairs == pair_count(6, 3)
    result = enumerate_approx_min_cuts(g, 1, budget=10, force=True)
    assert len(result.cuts) == 6
    assert enumerate_approx_min_cuts(g, 1, budget=None).cuts == result.cuts

def test_subsumed_pair_filter_keeps_the_output(p3):
    plain = enumerate_approx_min_cuts(p3, 2)
    filtered = enumerate_approx_min_cuts(p3, 2, pair_filter='SubsumedPairFilter')
    assert filtered.cuts == plain.cuts
    assert filtered.skipped > 0
    assert filtered.flow_calls < plain.flow_calls

    g = random_connected_graph(8, seed=5)
    assert enumerate_approx_min_cuts(g, '3/2', pair_filter='SubsumedPairFilter').cuts == \
        enumerate_approx_min_cuts(g, '3/2').cuts

def test_subsumed_pair_filter_lookup():
    pair_filter = PAIR_FILTERS.build('SubsumedPairFilter')
    # S' = {1}, T' = {4}, U = {0, 1, 2}
    pair_filter.record(0b00010, 0b10000, 0b00111, unique=True)
    pair_filter.record(0b00100, 0b01000, 0b00100, unique=False)

    assert pair_filter.skip(0b00011, 0b11000)
    assert pair_filter.skip(0b00110, 0b10000)
    assert not pair_filter.skip(0b01010, 0b10000)
    assert not pair_filter.skip(0b00010, 0b00100 | 0b10000)
    assert not pair_filter.skip(0b00100, 0b01000)
    assert pair_filter.skipped == 2

def test_unknown_pair_filter(p3):
    with pytest.raises(DomainError):
        enumerate_approx_min_cuts(p3, 1, pair_filter='Nope')

def test_workers_give_the_same_cuts():
    g = random_connected_graph(7, seed=2)
    serial = enumerate_approx_min_cuts(g, 2)
    parallel = enumerate_approx_min_cuts(g, 2, workers=2)
    assert parallel.cuts == serial.cuts
    assert parallel.pairs_scanned == serial.pairs_scanned

def test_push_relabel_engine(c8):
    assert enumerate_approx_min_cuts(c8, '3/2', engine='PushRelabel').cuts == \
        enumerate_approx_min_cuts(c8, '3/2').cuts

def test_brute_force_examples(p3, k3, tightness):
    assert {c.value for c in brute_force_cuts(p3, 1)} == {1}
    assert len(brute_force_cuts(p3, 1)) == 2
    assert len(brute_force_cuts(k3, 1)) == 3
    g, u = tightness
    assert brute_force_lambda(g) == 2
    assert Cut(u ^ g.full if u & 1 else u, 8) in brute_force_cuts(g, 4)

def test_brute_force_size_guard():
    with pytest.raises(DomainError):
        brute_force_cuts(path_graph(25), 1)

def test_brute_force_terminal_cuts(p3):
    assert brute_force_min_terminal_cuts(p3, {0}, {2}) == (1, [0b001, 0b011])
    assert brute_force_min_terminal_cuts(p3, {0}, {1}) == (1, [0b001])

@pytest.mark.parametrize('seed', range(12))
@pytest.mark.parametrize('alpha', ALPHAS)
def test_matches_brute_force_on_small_graphs(seed, alpha):
    g = random_connected_graph(4 + seed % 4, seed=seed)
    assert set(enumerate_approx_min_cuts(g, alpha).cuts) == brute_force_cuts(g, alpha)

@pytest.mark.slow
@pytest.mark.parametrize('seed', range(50))
@pytest.mark.parametrize('alpha', ALPHAS)
def test_matches_brute_force(seed, alpha):
    g = random_connected_graph(4 + seed % 7, seed=1000 + seed)
    result = enumerate_approx_min_cuts(g, alpha)
    assert set(result.cuts) == brute_force_cuts(g, alpha)
    assert count_bound_holds(g.n, alpha, len(result.cuts))

@settings(max_examples=15, deadline=None)
@given(connected_graphs(max_n=7))
def test_monotone_in_alpha(g):
    previous = set()
    for alpha in ALPHAS:
        current = set(enumerate_approx_min_cuts(g, alpha).cuts)
        assert previous <= current
        previous = current

def test_contraction_baseline_examples(p3, k3):
    assert contraction_baseline(k3, 1, trials=50, seed=1) <= brute_force_cuts(k3, 1)
    assert contraction_baseline(p3, 1, trials=100, seed=7) == brute_force_cuts(p3, 1)
    with pytest.raises(DomainError):
        contraction_baseline(p3, 1, trials=0, seed=1)

def test_contraction_baseline_is_seeded_subset():
    for seed in range(6):
        g = random_connected_graph(8, seed=seed)
        first = contraction_baseline(g, 2, trials=60, seed=seed)
        assert first == contraction_baseline(g, 2, trials=60, seed=seed)
        assert first <= set(enumerate_approx_min_cuts(g, 2).cuts)

def test_contraction_finds_cycle_min_cuts(c8):
    found = contraction_baseline(c8, 1, trials=400, seed=3)
    assert found
    assert all(c.value == 2 for c in found)
