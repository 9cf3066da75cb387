import networkx as nx
import pytest
from hypothesis import given, strategies as st

from dom22.domination import is_kl_dominated
from dom22.errors import (InvalidParameterError, PreconditionError, TooLargeError,
                          UnsupportedError)
from dom22.generate import (GenSpec, build, cartesian_product, complete, complete_bipartite,
                            cycle, enumerate_connected, random_F_graph, random_multigraph,
                            theta)
from dom22.isomorphism import are_isomorphic
from dom22.multigraph import MultiGraph
from dom22.recognition import is_minimal_22_structural
from dom22.textio import format_graph
from dom22.transform import decompose, replay, subdivide

from strategies import labelled_connected_classes


def _by_size(graphs):
    counts = {}
    for g in graphs:
        counts[g.n] = counts.get(g.n, 0) + 1
    return [counts[n] for n in sorted(counts)]


def _to_nx(g):
    out = nx.MultiGraph()
    out.add_nodes_from(g.vertices())
    for u, v, m in g.edges():
        out.add_edges_from([(u, v)] * m)
    return out


def test_named_families():
    c6 = cycle(6)
    assert c6.n == 6 and c6.edge_count == 6 and set(c6.degrees()) == {2}
    assert cycle(2) == MultiGraph(2, {(0, 1): 2})
    assert cycle(1) == MultiGraph(1, loops=[1])
    assert complete(4).edge_count == 6 and set(complete(4).degrees()) == {3}
    k23 = complete_bipartite(2, 3)
    assert k23.degrees() == [3, 3, 2, 2, 2]
    assert theta().n == 8 and theta().degrees()[:2] == [3, 3]
    for bad in (lambda: cycle(0), lambda: complete(0), lambda: complete_bipartite(0, 2)):
        with pytest.raises(InvalidParameterError):
            bad()


def test_cartesian_product_examples():
    k2 = complete(2)
    assert are_isomorphic(cartesian_product(k2, k2), cycle(4))
    prism = cartesian_product(k2, cycle(5))
    assert prism.n == 10 and set(prism.degrees()) == {3}
    assert is_kl_dominated(prism, 2, 2)
    cube = cartesian_product(k2, complete(4))
    assert cube.n == 8 and is_kl_dominated(cube, 3, 3)
    with pytest.raises(UnsupportedError):
        cartesian_product(k2, cycle(2))


def test_product_matches_networkx():
    for g, h in [(complete(3), cycle(4)), (complete_bipartite(1, 3), complete(2))]:
        ours = _to_nx(cartesian_product(g, h))
        ref = nx.cartesian_product(_to_nx(g), _to_nx(h))
        assert nx.is_isomorphic(ours, nx.Graph(ref))


def test_random_multigraph_determinism_and_filters():
    assert random_multigraph(5, seed=1) == random_multigraph(5, seed=1)
    g = random_multigraph(6, max_mult=2, seed=4, min_degree=2)
    assert g.min_degree() >= 2
    one = random_multigraph(1, loop_prob=1.0, seed=0)
    assert one.loops(0) >= 1 and one.degree(0) >= 2
    with pytest.raises(InvalidParameterError):
        random_multigraph(3, edge_prob=0.0, min_degree=2, max_tries=5)


def test_random_F_graph():
    h = MultiGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    g, cert = random_F_graph(h, 0, seed=5)
    assert g == subdivide(h) and cert.steps == ()
    with pytest.raises(PreconditionError):
        random_F_graph(complete(2), 1)
    with pytest.raises(PreconditionError):
        random_F_graph(MultiGraph(4, {(0, 1): 2, (2, 3): 2}), 1)


@given(st.integers(0, 2**32), st.integers(0, 4))
def test_random_F_outputs_are_minimal_and_decompose(seed, steps):
    g, cert = build(GenSpec("random_F", {"n": 4, "steps": steps}, seed))
    assert is_minimal_22_structural(g)
    assert replay(cert) == g
    assert are_isomorphic(replay(decompose(g)), g)


def test_enumeration_small_counts_against_brute_force():
    assert _by_size(enumerate_connected(5)) == [labelled_connected_classes(n) for n in range(1, 6)]
    multi = [labelled_connected_classes(n, 2) for n in range(1, 5)]
    assert _by_size(enumerate_connected(4, 2)) == multi == [1, 2, 7, 53]


def test_enumeration_counts_against_graph_atlas():
    atlas = {}
    for g in nx.graph_atlas_g()[1:]:
        if nx.is_connected(g):
            atlas[g.number_of_nodes()] = atlas.get(g.number_of_nodes(), 0) + 1
    assert _by_size(enumerate_connected(7)) == [atlas[n] for n in range(1, 8)]


@pytest.mark.slow
def test_enumeration_full_bounds():
    assert _by_size(enumerate_connected(8)) == [1, 1, 2, 6, 21, 112, 853, 11117]
    assert _by_size(enumerate_connected(6, 2)) == [1, 2, 7, 53, 712, 24576]


def test_enumeration_is_duplicate_free():
    graphs = list(enumerate_connected(6))
    nxg = [_to_nx(g) for g in graphs]
    for i in range(len(graphs)):
        for j in range(i):
            if graphs[i].n == graphs[j].n:
                assert not nx.is_isomorphic(nxg[i], nxg[j])


def test_enumeration_is_deterministic():
    assert list(enumerate_connected(5, 2)) == list(enumerate_connected(5, 2))


def test_enumeration_bounds():
    with pytest.raises(TooLargeError):
        next(enumerate_connected(9))
    with pytest.raises(TooLargeError):
        next(enumerate_connected(7, 2))
    with pytest.raises(UnsupportedError):
        next(enumerate_connected(3, 3))


def test_build_dispatch():
    assert build(GenSpec("cycle", {"n": 5}))[0] == cycle(5)
    spec = GenSpec("cartesian_product", {"left": "complete", "left_params": {"n": 2},
                                         "right": "cycle", "right_params": {"n": 5}})
    assert build(spec)[0] == cartesian_product(complete(2), cycle(5))
    with pytest.raises(InvalidParameterError):
        build(GenSpec("petersen"))


@given(st.integers(0, 2**32))
def test_same_spec_same_bytes(seed):
    spec = GenSpec("random_multigraph", {"n": 6, "max_mult": 3, "loop_prob": 0.3}, seed)
    assert format_graph(build(spec)[0]) == format_graph(build(spec)[0])
