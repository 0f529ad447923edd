"""Slow, independent reference implementations used to cross-check the fast paths."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Sequence
from itertools import combinations, product

import networkx as nx

from .hypergraph import Graph, ThreeGraph, Triple, triple
from .topology import SPHERE, Complex, classify, is_closed_surface


def surfaces_by_subsets(
    edges: Iterable[Triple],
    vertices: Iterable[int],
    facet_count: int,
    *,
    required: Sequence[Triple] = (),
    accept: Callable[[Complex], bool] | None = None,
) -> Iterator[Complex]:
    """Every facet subset of the given size, spanning ``vertices``, that is a closed surface.

    Include/exclude over candidates in lexicographic order; a pair or vertex
    is abandoned once its last candidate has passed without being completed.
    """
    W = sorted(set(vertices))
    wset = set(W)
    req = sorted({triple(*f) for f in required})
    cands = sorted({e for e in edges if set(e) <= wset} - set(req))
    last_pair: dict[tuple[int, int], int] = {}
    last_vertex: dict[int, int] = {}
    for i, (a, b, c) in enumerate(cands):
        for p in ((a, b), (a, c), (b, c)):
            last_pair[p] = i
        for v in (a, b, c):
            last_vertex[v] = i
    count: dict[tuple[int, int], int] = {}
    deg = dict.fromkeys(W, 0)
    chosen: list[Triple] = []

    def add(f: Triple, sign: int) -> None:
        a, b, c = f
        for p in ((a, b), (a, c), (b, c)):
            count[p] = count.get(p, 0) + sign
        for v in f:
            deg[v] += sign

    for f in req:
        add(f, 1)
    if any(k > 2 for k in count.values()):
        return
    for p, k in count.items():
        if k == 1 and p not in last_pair:
            return
    for v in W:
        if deg[v] < 3 and v not in last_vertex:
            return

    def dead_after(i: int) -> bool:
        a, b, c = cands[i]
        for p in ((a, b), (a, c), (b, c)):
            if last_pair[p] == i and count.get(p, 0) == 1:
                return True
        return any(last_vertex[v] == i and deg[v] < 3 for v in (a, b, c))

    def rec(i: int) -> Iterator[Complex]:
        need = facet_count - len(req) - len(chosen)
        if need == 0:
            if all(k != 1 for k in count.values()) and all(deg[v] >= 3 for v in W):
                K = Complex(req + chosen)
                if is_closed_surface(K) and (accept is None or accept(K)):
                    yield K
            return
        if need > len(cands) - i:
            return
        f = cands[i]
        a, b, c = f
        if all(count.get(p, 0) < 2 for p in ((a, b), (a, c), (b, c))):
            add(f, 1)
            chosen.append(f)
            if not dead_after(i):
                yield from rec(i + 1)
            chosen.pop()
            add(f, -1)
        if not dead_after(i):
            yield from rec(i + 1)

    yield from rec(0)


def spanning_surface_exists(H: ThreeGraph, euler: int, vertices: Iterable[int] | None = None) -> Complex | None:
    W = list(range(H.n)) if vertices is None else sorted(set(vertices))
    return next(surfaces_by_subsets(H.edges, W, 2 * len(W) - 2 * euler), None)


def count_4cycles_bruteforce(G: Graph) -> int:
    total = 0
    for quad in combinations(range(G.n), 4):
        a = quad[0]
        # the three distinct 4-cycles on four vertices, anchored at a
        for b, c, d in ((quad[1], quad[2], quad[3]), (quad[1], quad[3], quad[2]), (quad[2], quad[1], quad[3])):
            if G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(c, d) and G.has_edge(d, a):
                total += 1
    return total


def touching_pairs_bruteforce(H: ThreeGraph) -> set[tuple[Triple, Triple]]:
    E = H.sorted_edges()
    return {(e, f) for e, f in combinations(E, 2) if len(set(e) & set(f)) == 2}


def touching_sphere_count_bruteforce(H: ThreeGraph, e: Triple, f: Triple) -> int:
    """Pairs {w, z} such that some 8-facet subcomplex on {x, y, u, v, w, z}
    containing e and f is a sphere in which x and y both have degree 4."""
    common = set(e) & set(f)
    (x,), (y,) = set(e) - common, set(f) - common
    rest = [w for w in range(H.n) if w not in set(e) | set(f)]

    def apexed(K: Complex) -> bool:
        dx = sum(x in g for g in K.facets)
        dy = sum(y in g for g in K.facets)
        return dx == 4 and dy == 4 and triple(*e) in K.facets and triple(*f) in K.facets

    total = 0
    for w, z in combinations(rest, 2):
        W = [x, y, *common, w, z]
        if next(surfaces_by_subsets(H.edges, W, 8, required=(e, f), accept=apexed), None) is not None:
            total += 1
    return total


def census_bruteforce(H: ThreeGraph, e: Triple, f: Triple, l: int) -> int:
    rest = [v for v in range(H.n) if v not in e and v not in f]
    total = 0
    for A in combinations(rest, l):
        W = [*e, *f, *A]
        spheres = surfaces_by_subsets(H.edges, W, 2 * len(W) - 4, required=(e, f), accept=lambda K: classify(K) == SPHERE)
        if next(spheres, None) is not None:
            total += 1
    return total


def cross_touching_bruteforce(H: ThreeGraph, colour_of: dict[Triple, str], a: str = "R", b: str = "G") -> int:
    E = H.sorted_edges()
    total = 0
    for e, f in combinations(E, 2):
        if len(set(e) & set(f)) == 2 and {colour_of[e], colour_of[f]} == {a, b}:
            total += 1
    return total


def colour_counts_bruteforce(H: ThreeGraph, colour_of: dict[Triple, str], threshold: float) -> dict:
    red_deg = [0] * H.n
    for e in H.edges:
        if colour_of[e] == "R":
            for v in e:
                red_deg[v] += 1
    return {
        "uncoloured": sum(colour_of[e] == "U" for e in H.edges),
        "red": sum(colour_of[e] == "R" for e in H.edges),
        "green": sum(colour_of[e] == "G" for e in H.edges),
        "cross": cross_touching_bruteforce(H, colour_of),
        "low_red": sum(d < threshold for d in red_deg),
    }


def green_link_bruteforce(H: ThreeGraph, colour_of: dict[Triple, str], v: int) -> set[tuple[int, int]]:
    return {tuple(sorted(set(e) - {v})) for e in H.edges if v in e and colour_of[e] == "G"}


def boundary_count_bruteforce(G: Graph, left: set[int], right: set[int]) -> int:
    """Edges with one end in ``left`` and the other in ``right``, each edge once."""
    total = 0
    for a in range(G.n):
        for b in range(a + 1, G.n):
            if G.has_edge(a, b) and ((a in left and b in right) or (b in left and a in right)):
                total += 1
    return total


def is_three_partite_bruteforce(H: ThreeGraph) -> bool:
    for colours in _colourings(H.n):
        if all(len({colours[v] for v in e}) == 3 for e in H.edges):
            return True
    return False


def _colourings(n: int) -> Iterator[tuple[int, ...]]:
    # vertex 0 fixed to colour 0
    for rest in product(range(3), repeat=n - 1):
        yield (0, *rest)


# sphere corpus


def _incidence(K: Complex) -> nx.Graph:
    G = nx.Graph()
    for v in K.vertices:
        G.add_node(("v", v), kind="v")
    for f in K.facets:
        G.add_node(("f", f), kind="f")
        for v in f:
            G.add_edge(("v", v), ("f", f))
    return G


def _split(K: Complex, v: int, a: int, b: int, new: int) -> Complex:
    """Split vertex v along the link chord a..b, adding ``new`` adjacent to v, a and b."""
    link = K.vertex_link(v)
    # walk the link cycle from a to b one way; those facets move to `new`
    cycle = [a]
    prev, cur = None, a
    while True:
        nxt = [w for w in link[cur] if w != prev][0] if prev is not None else link[cur][0]
        prev, cur = cur, nxt
        if cur == a:
            break
        cycle.append(cur)
    i = cycle.index(b)
    side = cycle[: i + 1]
    moved = {triple(v, side[j], side[j + 1]) for j in range(len(side) - 1)}
    facets = set(K.facets) - moved
    facets |= {triple(new, side[j], side[j + 1]) for j in range(len(side) - 1)}
    facets |= {triple(v, new, a), triple(v, new, b)}
    return Complex(facets)


def sphere_corpus(max_n: int = 8) -> dict[int, list[Complex]]:
    """All triangulated spheres with 4..max_n vertices up to isomorphism.

    Every triangulated sphere other than the tetrahedron arises from one
    with a vertex fewer by splitting a vertex along a path of two link
    edges; duplicates are removed by isomorphism of vertex-facet incidence
    graphs.
    """
    match = nx.algorithms.isomorphism.categorical_node_match("kind", None)
    levels = {4: [Complex(combinations(range(4), 3))]}
    for n in range(5, max_n + 1):
        found: list[tuple[Complex, nx.Graph, tuple]] = []
        for K in levels[n - 1]:
            for v in sorted(K.vertices):
                link = K.vertex_link(v)
                for a, b in combinations(sorted(link), 2):
                    new = _split(K, v, a, b, n - 1)
                    if not is_closed_surface(new) or classify(new) != SPHERE:
                        continue
                    inv = tuple(sorted(len(new.vertex_link(u)) for u in new.vertices))
                    G = _incidence(new)
                    if any(inv == i2 and nx.is_isomorphic(G, G2, node_match=match) for _, G2, i2 in found):
                        continue
                    found.append((new, G, inv))
        levels[n] = [K for K, _, _ in found]
    return levels
