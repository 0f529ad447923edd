from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypersurf.constructions import (
    P12_CLASSES,
    P12_FACETS,
    T9_CLASSES,
    T9_FACETS,
    absorb,
    build_absorber,
    double_ladder,
    expected_min_codegree,
    is_three_partite,
    parity_extremal,
    parity_sizes,
    r_graph_tight_components,
    r_partite_mod,
    single_tight_counterexample,
    tripartite_extremal,
    tripartite_sizes,
    two_component_extremal,
)
from hypersurf.hypergraph import ThreeGraph, min_codegree, tight_components
from hypersurf.oracles import is_three_partite_bruteforce
from hypersurf.topology import SPHERE, classify


@pytest.mark.parametrize("n", range(6, 40))
def test_tripartite_formula(n):
    assert min_codegree(tripartite_extremal(n)) == expected_min_codegree("tripartite", n)


def test_tripartite_edge_types():
    H = tripartite_extremal(9)
    x, y, _ = tripartite_sizes(9)
    cls = [0] * x + [1] * y + [2] * (9 - x - y)
    assert {tuple(sorted(cls[v] for v in e)) for e in H.edges} == {(0, 0, 1), (1, 1, 2), (0, 2, 2)}


@pytest.mark.parametrize("chi", [2, 1, 0, -2])
def test_parity_formula(chi):
    for n in range(4, 45):
        try:
            H = parity_extremal(n, chi)
        except ValueError:
            continue
        assert min_codegree(H) == expected_min_codegree("parity", n, chi)


def test_parity_sizes():
    assert parity_sizes(20, 0) == (14, 6)
    with pytest.raises(ValueError):
        parity_extremal(6, 2)


@pytest.mark.parametrize("n", range(5, 30))
def test_two_component_formula(n):
    H = two_component_extremal(n)
    assert min_codegree(H) == (n - 3) // 2
    assert len(tight_components(H)) == 2


def test_single_tight_counterexample():
    H = single_tight_counterexample(10)
    assert H.m == 40
    assert len(tight_components(H)) == 1
    with pytest.raises(ValueError):
        single_tight_counterexample(9)


def test_r_partite_mod_components():
    edges = r_partite_mod(9, 3)
    comps = r_graph_tight_components(edges)
    assert len(comps) == 3
    # no component reaches all three classes, so none spans
    for comp in comps:
        assert len({v // 3 for e in comp for v in e}) == 2
    with pytest.raises(ValueError):
        r_partite_mod(10, 3)


def test_r_partite_mod_four():
    edges = r_partite_mod(8, 4)
    assert all(sum(v // 2 + 1 for v in e) % 4 == 1 for e in edges)


def test_three_partite_fixed_complexes():
    for facets, classes in ((T9_FACETS, T9_CLASSES), (P12_FACETS, P12_CLASSES)):
        colour = {v: i for i, cls in enumerate(classes) for v in cls}
        assert all(len({colour[v] for v in f}) == 3 for f in facets)
        n = max(colour) + 1
        assert is_three_partite(ThreeGraph(n, facets)) is not None


@given(st.integers(4, 7), st.data())
def test_three_partite_matches_bruteforce(n, data):
    triples = list(combinations(range(n), 3))
    edges = data.draw(st.sets(st.sampled_from(triples), max_size=8))
    H = ThreeGraph(n, edges)
    assert (is_three_partite(H) is not None) == is_three_partite_bruteforce(H)


@pytest.mark.parametrize("k", range(1, 6))
def test_double_ladder_shape(k):
    G = double_ladder(k)
    assert G.n == 3 * (k + 1)
    assert len(G.sorted_edges()) == 3 * k + 2 * (k + 1)
    # grid graphs are bipartite by row + column parity
    for a, b in G.sorted_edges():
        ra, ca = divmod(a, k + 1)
        rb, cb = divmod(b, k + 1)
        assert (ra + ca) % 2 != (rb + cb) % 2


@pytest.mark.parametrize("k", range(1, 6))
def test_absorber_shape(k):
    a = build_absorber(k)
    assert classify(a.sphere) == SPHERE
    assert len(a.sphere.vertices) == 4 * (k + 1)
    assert len(a.sphere.facets) == 8 * k + 4
    assert set(a.green_edges) <= a.sphere.facets
    assert a.capacity == k


@pytest.mark.parametrize("k", range(1, 5))
def test_absorb_every_subset(k):
    a = build_absorber(k)
    for r in range(k + 1):
        for U in combinations(a.pool, r):
            K = absorb(a, U)
            assert classify(K) == SPHERE
            assert K.vertices == a.sphere.vertices | set(U)
            assert set(a.green_edges) <= K.facets


def test_absorb_rejects_foreign_vertices():
    a = build_absorber(2)
    with pytest.raises(ValueError):
        absorb(a, [999])


def test_absorber_custom_labels():
    a = build_absorber(1, ladder=range(10, 16), middle=(20, 21), pool=(30,))
    assert classify(absorb(a, [30])) == SPHERE
    with pytest.raises(ValueError):
        build_absorber(1, ladder=range(6), middle=(5, 6))
