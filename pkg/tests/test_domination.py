import pytest
from hypothesis import given, settings, strategies as st

from dom22.domination import (KLPair, find_kl_pair, is_k_dominating, is_kl_dominated, is_kl_pair,
                              scan_kl_pair)
from dom22.errors import InvalidParameterError, PreconditionError, TooLargeError
from dom22.generate import (cartesian_product, complete, complete_bipartite, cycle,
                            enumerate_connected)
from dom22.multigraph import MultiGraph

from strategies import brute_kl_pairs, multigraphs

DOUBLE = MultiGraph.from_edges(2, [(0, 1), (0, 1)])


def test_is_k_dominating_examples():
    assert is_k_dominating(cycle(4), {0, 2}, 2)
    assert is_k_dominating(DOUBLE, {0}, 2)
    assert not is_k_dominating(cycle(5), {0, 2}, 2)
    assert is_k_dominating(cycle(5), set(range(5)), 7)
    with pytest.raises(InvalidParameterError):
        is_k_dominating(cycle(4), {0}, 0)


def test_loops_never_help_domination():
    g = MultiGraph(2, {(0, 1): 1}, [0, 3])
    assert not is_k_dominating(g, {0}, 2)


def test_is_kl_pair_examples():
    assert is_kl_pair(cycle(6), KLPair({0, 2, 4}, {1, 3, 5}, 2, 2))
    assert not is_kl_pair(cycle(4), KLPair({0, 2}, {1}, 2, 2))
    assert is_kl_pair(complete(4), KLPair({0}, {1, 2, 3}, 1, 3))


def test_kl_pair_requires_proper_nonempty_sets():
    assert not is_kl_pair(cycle(4), KLPair(set(), {0, 1}, 1, 1))
    with pytest.raises(PreconditionError):
        KLPair({0, 1}, {1}, 1, 1)


def test_find_kl_pair_examples():
    assert find_kl_pair(cycle(5), 2, 2) is None
    p = find_kl_pair(complete(5), 2, 3)
    assert p is not None and is_kl_pair(complete(5), p)
    assert p.sides() == ([0, 1], [2, 3, 4])
    assert find_kl_pair(complete(5), 3, 3) is None
    p = find_kl_pair(complete_bipartite(3, 4), 3, 4)
    assert p.sides() == ([0, 1, 2], [3, 4, 5, 6])


def test_witness_is_lowest_bitmask():
    assert find_kl_pair(cycle(6), 2, 2).sides() == ([0, 2, 4], [1, 3, 5])


def test_is_kl_dominated_examples():
    k2 = complete(2)
    assert is_kl_dominated(cycle(8), 2, 2)
    assert is_kl_dominated(cartesian_product(k2, complete(4)), 3, 3)
    assert is_kl_dominated(cartesian_product(k2, complete(4)), 1, 4)


def test_double_edge_beats_vertex_count_bound():
    assert is_kl_dominated(DOUBLE, 2, 2)


def test_scale_guard():
    with pytest.raises(TooLargeError):
        find_kl_pair(cycle(25), 2, 2)
    assert find_kl_pair(cycle(30), 2, 2, max_vertices=30) is not None


@settings(max_examples=200)
@given(multigraphs(max_n=6, max_mult=3), st.integers(1, 3), st.integers(1, 3))
def test_matches_nested_brute_force(g, k, l):
    found = find_kl_pair(g, k, l)
    brute = next(brute_kl_pairs(g, k, l), None)
    assert (found is None) == (brute is None)
    if found is not None:
        assert is_kl_pair(g, found)


@settings(max_examples=300)
@given(multigraphs(max_n=9, max_mult=3), st.integers(1, 4), st.integers(1, 4))
def test_witness_is_the_lowest_bitmask_scan(g, k, l):
    assert find_kl_pair(g, k, l) == scan_kl_pair(g, k, l)


@given(multigraphs(max_n=6, max_mult=2), st.integers(1, 3), st.integers(1, 3))
def test_symmetric_in_k_and_l(g, k, l):
    assert is_kl_dominated(g, k, l) == is_kl_dominated(g, l, k)


@given(multigraphs(max_n=6, max_mult=2), st.integers(1, 3), st.integers(1, 3))
def test_necessary_conditions(g, k, l):
    if is_kl_dominated(g, k, l):
        assert max(k, l) <= g.max_degree()
        assert min(k, l) <= g.min_degree()


def test_simple_graphs_need_k_plus_l_vertices():
    for g in enumerate_connected(5):
        for k in range(1, 4):
            for l in range(1, 4):
                if is_kl_dominated(g, k, l):
                    assert k + l <= g.n


def test_downward_monotone_on_all_small_connected_graphs():
    for g in enumerate_connected(7):
        top = g.max_degree()
        table = {(k, l): is_kl_dominated(g, k, l)
                 for k in range(1, top + 1) for l in range(1, top + 1)}
        for (k, l), ok in table.items():
            if ok:
                assert all(table[(a, b)] for a in range(1, k + 1) for b in range(1, l + 1))


def test_ore_every_graph_without_isolated_vertices_is_11():
    for g in enumerate_connected(7):
        if g.n >= 2:
            assert is_kl_dominated(g, 1, 1)


@given(multigraphs(max_n=6, max_mult=2, min_degree=2), st.data())
def test_adding_edges_preserves_22(g, data):
    if not is_kl_dominated(g, 2, 2):
        return
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    assert is_kl_dominated(g.add_edge(u, v), 2, 2)


@given(multigraphs(max_n=7, max_mult=2, loops=False))
def test_bipartite_min_degree_two_is_22(g):
    if g.min_degree() >= 2 and g.is_bipartite():
        assert is_kl_dominated(g, 2, 2)
