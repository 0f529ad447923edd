import networkx as nx
from hypothesis import given, settings

from hypersurf.hypergraph import Graph
from hypersurf.matching import matching_edges, maximum_matching

from .strategies import graphs


def _nx_size(G):
    N = nx.Graph()
    N.add_nodes_from(range(G.n))
    N.add_edges_from(G.sorted_edges())
    return len(nx.max_weight_matching(N, maxcardinality=True))


def test_odd_cycle_blossom():
    # a 5-cycle with a pendant needs blossom contraction
    G = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
    assert len(matching_edges(maximum_matching(G))) == 3


def test_empty():
    assert maximum_matching(Graph(0)) == {}
    assert maximum_matching(Graph(4)) == {}


@settings(max_examples=200)
@given(graphs(max_n=14))
def test_matches_networkx(G):
    mate = maximum_matching(G)
    assert all(mate[mate[v]] == v for v in mate)
    assert all(G.has_edge(a, b) for a, b in matching_edges(mate))
    assert len(matching_edges(mate)) == _nx_size(G)
