from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypersurf.constructions import double_pyramid, projective_P12, torus_T9
from hypersurf.oracles import sphere_corpus
from hypersurf.topology import (
    PROJECTIVE_PLANE,
    SPHERE,
    TORUS,
    Complex,
    NotASurface,
    SurfaceType,
    classify,
    connected_sum_glue,
    euler_characteristic,
    is_closed_surface,
    orientability,
    spans,
)
from hypersurf.hypergraph import ThreeGraph

TETRA = Complex(combinations(range(4), 3))
OCTA = double_pyramid(4)
CORPUS = [K for spheres in sphere_corpus(8).values() for K in spheres]


def test_fixed_complexes():
    assert classify(torus_T9()) == TORUS
    assert classify(projective_P12()) == PROJECTIVE_PLANE
    assert classify(TETRA) == SPHERE
    assert len(torus_T9().vertices) == 9 and len(projective_P12().vertices) == 12


def test_orientability():
    assert orientability(torus_T9())
    assert not orientability(projective_P12())


@pytest.mark.parametrize("c", [3, 4, 7, 20])
def test_double_pyramid_sphere(c):
    K = double_pyramid(c)
    assert classify(K) == SPHERE
    assert len(K.facets) == 2 * c


def test_missing_facet_fails_pair_condition():
    K = Complex(list(OCTA.facets)[1:])
    check = is_closed_surface(K)
    assert not check and check.failed == "pair"


def test_pinched_vertex_fails_link_condition():
    # two tetrahedra sharing one vertex
    other = Complex(combinations((0, 4, 5, 6), 3))
    check = is_closed_surface(Complex(TETRA.facets | other.facets))
    assert not check and check.failed == "vertex" and check.witness["vertex"] == 0


def test_disjoint_spheres_fail_connectivity():
    other = Complex(combinations(range(4, 8), 3))
    check = is_closed_surface(Complex(TETRA.facets | other.facets))
    assert not check and check.failed == "connectivity"


def test_classify_rejects_non_surface():
    with pytest.raises(NotASurface):
        classify(Complex(list(OCTA.facets)[1:]))


@given(st.sampled_from(CORPUS), st.data())
def test_classification_stable_under_relabelling(K, data):
    n = max(K.vertices) + 1
    perm = data.draw(st.permutations(list(range(n))))
    assert classify(K.relabel(perm)) == classify(K) == SPHERE


@given(st.sampled_from(CORPUS + [torus_T9(), projective_P12()]))
def test_facet_count_identities(K):
    F, E, V = len(K.facets), len(K.pair_facets), len(K.vertices)
    assert 3 * F == 2 * E
    assert F == 2 * V - 2 * euler_characteristic(K)


@pytest.mark.parametrize(
    "name, euler, orientable",
    [
        ("sphere", 2, True),
        ("torus", 0, True),
        ("projective-plane", 1, False),
        ("klein-bottle", 0, False),
        ("torus-sum(3)", -4, True),
        ("projective-sum(5)", -3, False),
    ],
)
def test_surface_names(name, euler, orientable):
    kind = SurfaceType.parse(name)
    assert (kind.euler, kind.orientable) == (euler, orientable)
    assert SurfaceType.parse(kind.name) == kind


@pytest.mark.parametrize("euler, orientable", [(1, True), (3, True), (2, False)])
def test_impossible_surface_types(euler, orientable):
    with pytest.raises(ValueError):
        SurfaceType(euler, orientable)


@pytest.mark.parametrize(
    "kind, n",
    [(SPHERE, 4), (TORUS, 7), (PROJECTIVE_PLANE, 6), (SurfaceType(0, False), 8), (SurfaceType(-2, True), 10), (SurfaceType(-1, False), 9)],
)
def test_minimum_vertices(kind, n):
    assert kind.min_vertices() == n


def test_spans_checks_host_edges():
    H = ThreeGraph(6, OCTA.facets)
    assert spans(OCTA, H)
    with pytest.raises(ValueError):
        spans(OCTA, ThreeGraph(6, list(OCTA.facets)[1:]))


def _shift(K, by):
    return K.relabel({v: v + by for v in K.vertices})


def test_connected_sum_of_tori():
    K1, K2 = torus_T9(), _shift(torus_T9(), 9)
    f1, f2 = min(K1.facets), min(K2.facets)
    # octahedron with f1 and f2 as opposite faces
    a, b, c = f1
    x, y, z = f2
    tube = Complex([f1, f2, (a, b, z), (b, z, x), (b, c, x), (c, x, y), (c, a, y), (a, y, z)])
    glued = connected_sum_glue(K1, K2, tube, (f1, f2))
    kind = classify(glued)
    assert kind.orientable and kind.euler == -2


def test_connected_sum_torus_projective_plane():
    K1, K2 = torus_T9(), _shift(projective_P12(), 9)
    f1, f2 = min(K1.facets), min(K2.facets)
    a, b, c = f1
    x, y, z = f2
    tube = Complex([f1, f2, (a, b, z), (b, z, x), (b, c, x), (c, x, y), (c, a, y), (a, y, z)])
    kind = classify(connected_sum_glue(K1, K2, tube, (f1, f2)))
    assert not kind.orientable and kind.euler == -1


def test_connected_sum_rejects_overlap():
    f = min(TETRA.facets)
    with pytest.raises(ValueError):
        connected_sum_glue(TETRA, TETRA, TETRA, (f, f))
