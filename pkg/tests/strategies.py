from itertools import combinations

from hypothesis import strategies as st

from hypersurf.hypergraph import Graph, ThreeGraph


@st.composite
def three_graphs(draw, min_n=4, max_n=8):
    n = draw(st.integers(min_n, max_n))
    triples = list(combinations(range(n), 3))
    keep = draw(st.lists(st.booleans(), min_size=len(triples), max_size=len(triples)))
    return ThreeGraph(n, (t for t, k in zip(triples, keep) if k))


@st.composite
def dense_three_graphs(draw, min_n=4, max_n=8):
    # most triples present, so surfaces are common
    n = draw(st.integers(min_n, max_n))
    triples = list(combinations(range(n), 3))
    drop = draw(st.sets(st.sampled_from(triples), max_size=len(triples) // 3))
    return ThreeGraph(n, set(triples) - drop)


@st.composite
def graphs(draw, min_n=0, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, (p for p, k in zip(pairs, keep) if k))


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))
