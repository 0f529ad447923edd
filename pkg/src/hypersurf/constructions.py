"""Generators for the extremal 3-graphs, fixed complexes and absorbing gadgets.

All vertex classes are consecutive index blocks, listed in the order the
classes are named in each docstring.
"""

from __future__ import annotations

import math
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product

from .hypergraph import Graph, ThreeGraph, Triple, UnionFind, triple
from .topology import Complex


def _blocks(sizes: Sequence[int]) -> list[range]:
    out, start = [], 0
    for s in sizes:
        out.append(range(start, start + s))
        start += s
    return out


def _class_map(sizes: Sequence[int]) -> list[int]:
    return [i for i, s in enumerate(sizes) for _ in range(s)]


def tripartite_sizes(n: int) -> tuple[int, int, int]:
    q = n // 3
    return n - 2 * q, q, q


def tripartite_extremal(n: int) -> ThreeGraph:
    """Classes X, Y, Z; edges of type XXY, YYZ and ZZX."""
    if n < 6:
        raise ValueError("tripartite construction needs n >= 6")
    cls = _class_map(tripartite_sizes(n))
    keep = {(0, 0, 1), (1, 1, 2), (0, 2, 2)}
    return ThreeGraph(n, (e for e in combinations(range(n), 3) if tuple(sorted(cls[v] for v in e)) in keep))


def parity_sizes(n: int, chi: int) -> tuple[int, int]:
    # least integer strictly exceeding (2n - 2chi)/3
    x = (2 * n - 2 * chi) // 3 + 1
    return x, n - x


def parity_extremal(n: int, chi: int) -> ThreeGraph:
    """Classes X, Y; edges meeting X in one or three vertices."""
    x, y = parity_sizes(n, chi)
    # x > y keeps the XY pairs (codegree y-1) as the minimum; fails only at n=6, chi=2
    if not 3 <= x <= n - 2 or x <= y:
        raise ValueError(f"parity construction infeasible for n={n}, chi={chi} (|X|={x}, |Y|={y})")
    return ThreeGraph(n, (e for e in combinations(range(n), 3) if sum(v < x for v in e) % 2))


def two_component_extremal(n: int) -> ThreeGraph:
    """Classes X (floor n/2), Y (ceil n/2); edges meeting Y in an odd number of vertices."""
    if n < 5:
        raise ValueError("two-component construction needs n >= 5")
    x = n // 2
    return ThreeGraph(n, (e for e in combinations(range(n), 3) if sum(v >= x for v in e) % 2))


def single_tight_counterexample(n: int) -> ThreeGraph:
    """Vertices u=0, v=1, then X and Y of size (n-2)/2; no edge meets both X and Y."""
    if n % 2 or n < 8:
        raise ValueError("single tight component construction needs even n >= 8")
    half = (n - 2) // 2
    side = [None, None] + [0] * half + [1] * half
    return ThreeGraph(
        n, (e for e in combinations(range(n), 3) if len({side[v] for v in e} - {None}) < 2)
    )


def r_partite_mod(n: int, r: int) -> list[tuple[int, ...]]:
    """r-sets whose class indices (1-based) sum to 1 mod r, classes of size n/r."""
    if r < 3:
        raise ValueError("r must be at least 3")
    if n % r:
        raise ValueError(f"r={r} does not divide n={n}")
    blocks = _blocks([n // r] * r)
    out = []
    for pattern in combinations_with_replacement(range(1, r + 1), r):
        if sum(pattern) % r != 1 % r:
            continue
        counts = {i: pattern.count(i) for i in set(pattern)}
        parts = [combinations(blocks[i - 1], c) for i, c in sorted(counts.items())]
        for choice in product(*parts):
            out.append(tuple(sorted(v for chunk in choice for v in chunk)))
    return sorted(out)


def r_graph_tight_components(edges: Sequence[tuple[int, ...]]) -> list[list[tuple[int, ...]]]:
    """Tight components of an r-graph: edges touch when they share r-1 vertices."""
    order = sorted(set(edges))
    uf = UnionFind(len(order))
    first: dict[tuple[int, ...], int] = {}
    for i, e in enumerate(order):
        for sub in combinations(e, len(e) - 1):
            if sub in first:
                uf.union(first[sub], i)
            else:
                first[sub] = i
    groups: dict[int, list[tuple[int, ...]]] = {}
    for i, e in enumerate(order):
        groups.setdefault(uf.find(i), []).append(e)
    return sorted(groups.values())


def complete(n: int) -> ThreeGraph:
    return ThreeGraph.complete(n)


# 4x4 grid of labels with opposite sides identified, each square split along
# its rising diagonal; labels start at 0.
T9_FACETS: tuple[Triple, ...] = (
    (0, 1, 3), (0, 1, 7), (0, 2, 5), (0, 2, 6), (0, 3, 5), (0, 6, 7),
    (1, 2, 4), (1, 2, 8), (1, 3, 4), (1, 7, 8), (2, 4, 5), (2, 6, 8),
    (3, 4, 6), (3, 5, 8), (3, 6, 8), (4, 5, 7), (4, 6, 7), (5, 7, 8),
)
T9_CLASSES = ((0, 4, 8), (1, 5, 6), (2, 3, 7))

# Faces of a planar drawing inside a rectangle with antipodal boundary
# identification; labels start at 0.
P12_FACETS: tuple[Triple, ...] = (
    (0, 1, 6), (0, 1, 9), (0, 2, 3), (0, 2, 10), (0, 3, 6), (0, 4, 8),
    (0, 4, 10), (0, 8, 9), (1, 2, 5), (1, 2, 11), (1, 4, 7), (1, 4, 11),
    (1, 5, 9), (1, 6, 7), (2, 3, 5), (2, 10, 11), (3, 4, 5), (3, 4, 7),
    (3, 6, 7), (4, 5, 8), (4, 10, 11), (5, 8, 9),
)
P12_CLASSES = ((0, 5, 7, 11), (1, 3, 8, 10), (2, 4, 6, 9))


def torus_T9() -> Complex:
    return Complex(T9_FACETS)


def projective_P12() -> Complex:
    return Complex(P12_FACETS)


def double_pyramid(c: int, cycle: Sequence[int] | None = None, apexes: tuple[int, int] | None = None) -> Complex:
    """Cycle ``v0..v_{c-1}`` (default 0..c-1) with apexes (default c, c+1)."""
    if c < 3:
        raise ValueError("double pyramid needs a cycle of length >= 3")
    cyc = list(range(c)) if cycle is None else list(cycle)
    x, y = (c, c + 1) if apexes is None else apexes
    if len(cyc) != c or len(set(cyc) | {x, y}) != c + 2:
        raise ValueError("cycle and apexes must be c+2 distinct vertices")
    facets = []
    for i in range(c):
        a, b = cyc[i], cyc[(i + 1) % c]
        facets += [(a, b, x), (a, b, y)]
    return Complex(facets)


def ladder_vertex(k: int, row: int, col: int) -> int:
    return row * (k + 1) + col


def double_ladder(k: int) -> Graph:
    """3 rows by k+1 columns, joined horizontally and vertically; vertex (r, c) is r*(k+1)+c."""
    if k < 1:
        raise ValueError("double ladder needs k >= 1")
    edges = []
    for r in range(3):
        for c in range(k + 1):
            if c < k:
                edges.append((ladder_vertex(k, r, c), ladder_vertex(k, r, c + 1)))
            if r < 2:
                edges.append((ladder_vertex(k, r, c), ladder_vertex(k, r + 1, c)))
    return Graph(3 * (k + 1), edges)


@dataclass(frozen=True)
class Absorber:
    """The absorbing sphere over a double ladder with k spaces.

    ``grid[r][c]`` are the ladder vertices (row 0 bottom, row 2 top),
    ``middle[i]`` is t_{i+1}; space ``i`` lies between columns ``i-1`` and
    ``i``, holds t_i and is reserved for ``pool[i-1]``.
    """

    sphere: Complex
    green_edges: tuple[Triple, Triple]
    grid: tuple[tuple[int, ...], ...]
    middle: tuple[int, ...]
    pool: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.middle) - 1

    @property
    def capacity(self) -> int:
        return len(self.pool)

    @property
    def apex(self) -> int:
        return self.middle[-1]


def _space_facets(grid, i: int, t: int) -> list[Triple]:
    # hexagon around t in space i: the four corners and the two middle-row ends
    l, r = i - 1, i
    ring = [grid[0][l], grid[0][r], grid[1][r], grid[2][r], grid[2][l], grid[1][l]]
    return [triple(t, ring[j], ring[(j + 1) % 6]) for j in range(6)]


def _absorbed_facets(grid, i: int, t: int, v: int) -> list[Triple]:
    l, r = i - 1, i
    low = [grid[0][l], grid[0][r], grid[1][r], grid[1][l]]
    high = [grid[1][l], grid[1][r], grid[2][r], grid[2][l]]
    return [triple(t, low[j], low[(j + 1) % 4]) for j in range(4)] + [
        triple(v, high[j], high[(j + 1) % 4]) for j in range(4)
    ]


def build_absorber(
    k: int,
    ladder: Sequence[int] | None = None,
    middle: Sequence[int] | None = None,
    pool: Sequence[int] | None = None,
) -> Absorber:
    """The gadget on 3(k+1) ladder vertices (row-major) and k+1 middle vertices.

    Defaults label the ladder ``0..3k+2``, t_1..t_{k+1} as the next k+1
    integers and the k pool vertices after those.
    """
    if k < 1:
        raise ValueError("absorber needs k >= 1")
    size = 3 * (k + 1)
    lad = list(range(size)) if ladder is None else list(ladder)
    mid = list(range(size, size + k + 1)) if middle is None else list(middle)
    if len(lad) != size or len(mid) != k + 1:
        raise ValueError(f"need {size} ladder labels and {k + 1} middle labels")
    res = list(range(size + k + 1, size + 2 * k + 1)) if pool is None else list(pool)
    if len(res) != k:
        raise ValueError(f"need {k} pool vertices")
    if len(set(lad) | set(mid) | set(res)) != size + 2 * k + 1:
        raise ValueError("absorber labels collide")
    grid = tuple(tuple(lad[r * (k + 1) : (r + 1) * (k + 1)]) for r in range(3))
    apex = mid[k]
    facets: list[Triple] = []
    for i in range(1, k + 1):
        facets += _space_facets(grid, i, mid[i - 1])
    # the apex sees the outer boundary of the ladder
    rim = [grid[1][0], *grid[2], grid[1][k], *reversed(grid[0])]
    facets += [triple(apex, rim[j], rim[(j + 1) % len(rim)]) for j in range(len(rim))]
    green = (triple(apex, grid[1][0], grid[2][0]), triple(apex, grid[1][0], grid[0][0]))
    return Absorber(Complex(facets), green, grid, tuple(mid), tuple(res))


def absorb(a: Absorber, subset: Iterable[int]) -> Complex:
    """Rewire the sphere so that it also covers ``subset``, a subset of the pool."""
    vs = set(subset)
    outside = sorted(vs - set(a.pool))
    if outside:
        raise ValueError(f"vertices {outside} are not reserved by this absorber (pool {list(a.pool)})")
    facets = set(a.sphere.facets)
    for i, v in enumerate(a.pool, 1):
        if v in vs:
            t = a.middle[i - 1]
            facets -= set(_space_facets(a.grid, i, t))
            facets |= set(_absorbed_facets(a.grid, i, t, v))
    return Complex(facets)


GENERATORS = {
    "tripartite": (tripartite_extremal, ("n",)),
    "parity": (parity_extremal, ("n", "chi")),
    "two-component": (two_component_extremal, ("n",)),
    "single-tight": (single_tight_counterexample, ("n",)),
    "complete": (complete, ("n",)),
    "t9": (torus_T9, ()),
    "p12": (projective_P12, ()),
    "double-pyramid": (double_pyramid, ("c",)),
    "absorber": (lambda k: build_absorber(k).sphere, ("k",)),
}


def expected_min_codegree(name: str, n: int, chi: int | None = None) -> int:
    """Closed forms for the minimum codegree of the extremal families."""
    if name == "tripartite":
        return n // 3 - 1
    if name == "parity":
        return math.ceil((n + 2 * chi) / 3) - 2
    if name == "two-component":
        return (n - 3) // 2
    raise KeyError(name)


def random_three_graph(n: int, p: float, rng: random.Random) -> ThreeGraph:
    return ThreeGraph(n, (e for e in combinations(range(n), 3) if rng.random() < p))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, (e for e in combinations(range(n), 2) if rng.random() < p))


def is_three_partite(H: ThreeGraph) -> tuple[int, ...] | None:
    """A vertex 3-colouring meeting every edge in all three colours, if any.

    This is proper 3-colouring of the shadow graph, found by backtracking in
    order of decreasing shadow degree.
    """
    nbr = [set() for _ in range(H.n)]
    for a, b, c in H.edges:
        nbr[a] |= {b, c}
        nbr[b] |= {a, c}
        nbr[c] |= {a, b}
    order = sorted(range(H.n), key=lambda v: (-len(nbr[v]), v))
    colour = [-1] * H.n

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colour[u] for u in nbr[v]}
        # the first coloured vertex may take colour 0 only
        top = 1 if i == 0 else 3
        for c in range(top):
            if c not in taken:
                colour[v] = c
                if rec(i + 1):
                    return True
        colour[v] = -1
        return False

    return tuple(colour) if rec(0) else None
