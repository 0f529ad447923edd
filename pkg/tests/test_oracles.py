from itertools import combinations

import pytest

from hypersurf.constructions import complete
from hypersurf.oracles import is_three_partite_bruteforce, sphere_corpus, spanning_surface_exists
from hypersurf.hypergraph import ThreeGraph
from hypersurf.topology import SPHERE, classify


@pytest.fixture(scope="module")
def corpus():
    return sphere_corpus(8)


def test_corpus_counts(corpus):
    # triangulated spheres on 4..8 vertices
    assert [len(corpus[n]) for n in range(4, 9)] == [1, 1, 2, 5, 14]


def test_corpus_members_are_spheres(corpus):
    for n, spheres in corpus.items():
        for K in spheres:
            assert classify(K) == SPHERE and len(K.vertices) == n and len(K.facets) == 2 * n - 4


def test_bruteforce_finds_octahedron_host():
    assert spanning_surface_exists(complete(6), 2) is not None
    assert spanning_surface_exists(ThreeGraph(6, combinations(range(5), 3)), 2) is None


def test_three_partite_bruteforce():
    assert is_three_partite_bruteforce(ThreeGraph(6, [(0, 2, 4), (1, 3, 5)]))
    assert not is_three_partite_bruteforce(complete(4))
