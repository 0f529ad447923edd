from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersurf.constructions import complete, two_component_extremal
from hypersurf.hypergraph import Graph, ThreeGraph, tight_components
from hypersurf.oracles import boundary_count_bruteforce, colour_counts_bruteforce, cross_touching_bruteforce, green_link_bruteforce
from hypersurf.toolkit import (
    Colour,
    EdgeColouring,
    MatchPartitionError,
    boundary_edges,
    check_colouring,
    green_link,
    match_partition,
    merge_colouring,
)

from .strategies import graphs, three_graphs


def colourings(H):
    return st.lists(st.sampled_from("RGU"), min_size=H.m, max_size=H.m).map(
        lambda cs: EdgeColouring(H, dict(zip(H.sorted_edges(), cs)))
    )


def test_all_green_complete_passes():
    H = complete(10)
    rep = check_colouring(H, EdgeColouring.uniform(H, Colour.GREEN), eps=0.1, mu=0.1)
    # no red edges, so every vertex has low red degree
    assert rep.passes
    assert rep["cross_touching"].value == 0
    assert rep["low_red_vertices"].value == 10


def test_codegree_clause_fails_on_sparse_host():
    H = ThreeGraph(6, [(0, 1, 2)])
    rep = check_colouring(H, EdgeColouring.uniform(H, Colour.RED), 0.5, 0.1)
    assert not rep.passes and not rep["min_codegree"].holds
    assert rep["min_codegree"].margin < 0


def test_components_coloured_apart_have_no_cross_pairs():
    H = two_component_extremal(10)
    parts = tight_components(H)
    assert len(parts) == 2
    c = EdgeColouring(H, {e: Colour.RED if k == 0 else Colour.GREEN for e, k in parts.component_of.items()})
    assert c.cross_touching == 0


def test_colouring_domain_checked():
    H = complete(5)
    with pytest.raises(ValueError):
        EdgeColouring(H, {(0, 1, 2): Colour.RED})


def test_host_mismatch():
    H = complete(5)
    with pytest.raises(ValueError):
        check_colouring(complete(6), EdgeColouring.uniform(H, Colour.RED), 0.1, 0.1)


@settings(max_examples=50)
@given(st.data())
def test_counts_match_oracle(data):
    H = data.draw(three_graphs(min_n=4, max_n=7))
    c = data.draw(colourings(H))
    raw = {e: col.value for e, col in c.colour_of.items()}
    t = 0.05 * H.n**2
    oracle = colour_counts_bruteforce(H, raw, t)
    assert c.cross_touching == cross_touching_bruteforce(H, raw) == oracle["cross"]
    assert c.stats(t) == {
        "red": oracle["red"],
        "green": oracle["green"],
        "uncoloured": oracle["uncoloured"],
        "cross_touching": oracle["cross"],
        "low_red": oracle["low_red"],
    }
    for v in range(H.n):
        assert set(green_link(H, c, v).sorted_edges()) == green_link_bruteforce(H, raw, v)


@settings(max_examples=30)
@given(st.data())
def test_green_link_inside_link(data):
    from hypersurf.hypergraph import link_graph

    H = data.draw(three_graphs(min_n=4, max_n=7))
    c = data.draw(colourings(H))
    v = data.draw(st.integers(0, H.n - 1))
    assert set(green_link(H, c, v).sorted_edges()) <= set(link_graph(H, v).sorted_edges())


def test_all_red_green_link_empty():
    H = complete(6)
    assert green_link(H, EdgeColouring.uniform(H, Colour.RED), 0).sorted_edges() == []
    with pytest.raises(ValueError):
        green_link(H, EdgeColouring.uniform(H, Colour.RED), 6)


def _two_cliques_with_bridge():
    edges = list(combinations(range(5), 3)) + list(combinations(range(5, 10), 3)) + [(0, 1, 5)]
    H = ThreeGraph(10, edges)
    initial = {e: 0 if max(e) < 5 else 1 for e in H.edges}
    return H, initial


def test_merge_cross_count_and_threshold():
    H, initial = _two_cliques_with_bridge()
    res = merge_colouring(H, 3, initial)
    # the bridge touches 012, 013 and 014 through the pair 01
    assert len(res.log) == 1 and res.log[0].count == 3
    assert len(res.classes()) == 1
    none = merge_colouring(H, 4, initial)
    assert none.log == [] and none.cross_counts() == {(0, 1): 3}


def test_no_merges_between_tight_components():
    res = merge_colouring(two_component_extremal(10), 1)
    assert res.log == [] and len(res.classes()) == 2


def test_merge_threshold_positive():
    with pytest.raises(ValueError):
        merge_colouring(complete(5), 0)


def test_as_edge_colouring_ranks_classes():
    H, initial = _two_cliques_with_bridge()
    initial[(0, 1, 5)] = 2
    c = merge_colouring(H, 100, initial).as_edge_colouring()
    assert c.counts[Colour.GREEN] == 10 and c.counts[Colour.RED] == 10 and c.counts[Colour.UNCOLOURED] == 1


@settings(max_examples=40)
@given(st.data())
def test_merge_invariants(data):
    H = data.draw(three_graphs(min_n=4, max_n=7))
    k = data.draw(st.integers(1, 4))
    initial = {e: data.draw(st.integers(0, k)) for e in H.sorted_edges()}
    t = data.draw(st.integers(1, 6))
    res = merge_colouring(H, t, initial)
    assert len(res.log) <= max(res.initial_classes - 1, 0)
    assert all(cnt < t for cnt in res.cross_counts().values())
    assert set(res.class_of) == set(H.edges)


def test_match_partition_perfect_matching():
    G = Graph(6, [(0, 1), (2, 3), (4, 5)])
    p = match_partition(G, 0.5, seed=0)
    assert p.B == frozenset() and p.C == frozenset() and len(p.matching_Z) == 3


def test_match_partition_star():
    G = Graph(6, [(0, v) for v in range(1, 6)])
    p = match_partition(G, 0.5, seed=0)
    assert len(p.B) == 4
    assert len(p.Z) + len(p.C) + len(p.D) == 2
    assert p.boundary_edge_count <= 0.5 * 36


@pytest.mark.parametrize("n", [3, 7])
def test_match_partition_small_complete_raises(n):
    # every Z/B/C/D split of K3 or K7 leaves a boundary above 0.1 n^2
    with pytest.raises(MatchPartitionError):
        match_partition(Graph.complete(n), 0.1, seed=0)
    assert _best_boundary(Graph.complete(n)) > 0.1 * n * n


def _best_boundary(G):
    # exhaustive over matchings and edge roles: inside Z, or oriented C to D
    from itertools import product

    best = None
    edges = G.sorted_edges()
    for size in range(G.n // 2 + 1):
        for M in combinations(edges, size):
            if len({v for e in M for v in e}) < 2 * size:
                continue
            for roles in product(range(3), repeat=size):
                Z, C = set(), set()
                for (a, b), r in zip(M, roles):
                    if r == 0:
                        Z |= {a, b}
                    else:
                        C.add(a if r == 1 else b)
                count = sum(1 for a, b in edges if a not in C and b not in C and not (a in Z and b in Z))
                best = count if best is None else min(best, count)
    return best


def test_match_partition_eps_range():
    with pytest.raises(ValueError):
        match_partition(Graph(3), 0, seed=0)


@settings(max_examples=60)
@given(graphs(max_n=14), st.sampled_from([0.1, 0.3, 0.5, 1.0]), st.integers(0, 10**6))
def test_match_partition_satisfies_clauses_or_raises(G, eps, seed):
    try:
        p = match_partition(G, eps, seed=seed)
    except MatchPartitionError:
        return
    assert p.Z | p.B | p.C | p.D == frozenset(range(G.n))
    assert sum(map(len, (p.Z, p.B, p.C, p.D))) == G.n
    assert {v for e in p.matching_Z for v in e} == set(p.Z)
    assert all(G.has_edge(c, d) and c in p.C and d in p.D for c, d in p.matching_CD)
    left, right = set(p.B | p.D), set(p.Z | p.B | p.D)
    assert p.boundary_edge_count == boundary_count_bruteforce(G, left, right) == boundary_edges(G, left, right)
    assert p.boundary_edge_count <= eps * G.n**2
    # B is the exposed set of a maximum matching, so it is independent
    assert not any(G.has_edge(a, b) for a, b in combinations(sorted(p.B), 2))
