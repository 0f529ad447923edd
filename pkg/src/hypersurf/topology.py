"""Recognition and classification of triangulated closed surfaces."""

from __future__ import annotations

import math
import re
from collections import defaultdict, deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .hypergraph import Pair, ThreeGraph, Triple, triple


class NotASurface(ValueError):
    """Raised when an operation requires a closed surface and gets something else."""


@dataclass(frozen=True)
class Complex:
    """A pure 2-dimensional simplicial complex given by its facets."""

    facets: frozenset[Triple]

    def __init__(self, facets: Iterable[Sequence[int]] = ()):
        object.__setattr__(self, "facets", frozenset(triple(*f) for f in facets))

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for f in self.facets for v in f)

    @cached_property
    def pair_facets(self) -> dict[Pair, list[Triple]]:
        out: dict[Pair, list[Triple]] = defaultdict(list)
        for f in sorted(self.facets):
            a, b, c = f
            out[(a, b)].append(f)
            out[(a, c)].append(f)
            out[(b, c)].append(f)
        return dict(out)

    @property
    def pairs(self) -> frozenset[Pair]:
        return frozenset(self.pair_facets)

    def sorted_facets(self) -> list[Triple]:
        return sorted(self.facets)

    def relabel(self, mapping: Mapping[int, int] | Sequence[int]) -> Complex:
        return Complex((mapping[a], mapping[b], mapping[c]) for a, b, c in self.facets)

    def vertex_link(self, v: int) -> dict[int, list[int]]:
        link: dict[int, list[int]] = defaultdict(list)
        for f in self.facets:
            if v in f:
                x, y = (u for u in f if u != v)
                link[x].append(y)
                link[y].append(x)
        return dict(link)

    def __len__(self) -> int:
        return len(self.facets)

    def __repr__(self) -> str:
        return f"Complex(V={len(self.vertices)}, F={len(self.facets)})"


_NAME = re.compile(r"^(torus|projective)-sum\((\d+)\)$")


@dataclass(frozen=True)
class SurfaceType:
    euler: int
    orientable: bool

    def __post_init__(self) -> None:
        if self.orientable and (self.euler > 2 or self.euler % 2):
            raise ValueError(f"no orientable surface has Euler characteristic {self.euler}")
        if not self.orientable and self.euler > 1:
            raise ValueError(f"no non-orientable surface has Euler characteristic {self.euler}")

    @property
    def genus(self) -> int:
        """Handles for orientable surfaces, crosscaps otherwise."""
        return (2 - self.euler) // 2 if self.orientable else 2 - self.euler

    @property
    def name(self) -> str:
        g = self.genus
        if self.orientable:
            return "sphere" if g == 0 else "torus" if g == 1 else f"torus-sum({g})"
        return "projective-plane" if g == 1 else f"projective-sum({g})"

    def facet_count(self, n: int) -> int:
        return 2 * n - 2 * self.euler

    def min_vertices(self) -> int:
        """Fewest vertices of any triangulation.

        Heawood's bound, which is attained except for the double torus, the
        Klein bottle and the sum of three projective planes (one more each).
        """
        bound = math.ceil((7 + math.sqrt(49 - 24 * self.euler)) / 2)
        if (self.euler, self.orientable) in ((-2, True), (0, False), (-1, False)):
            bound += 1
        return bound

    @classmethod
    def parse(cls, name: str) -> SurfaceType:
        key = name.strip().lower().replace("_", "-").replace(" ", "-")
        aliases = {
            "sphere": (2, True),
            "torus": (0, True),
            "projective-plane": (1, False),
            "rp2": (1, False),
            "klein-bottle": (0, False),
        }
        if key in aliases:
            return cls(*aliases[key])
        m = _NAME.match(key)
        if m:
            g = int(m.group(2))
            if g < 1:
                raise ValueError(f"genus must be positive in {name!r}")
            return cls(2 - 2 * g, True) if m.group(1) == "torus" else cls(2 - g, False)
        raise ValueError(f"unknown surface name {name!r}")

    def __str__(self) -> str:
        return self.name


SPHERE = SurfaceType(2, True)
TORUS = SurfaceType(0, True)
PROJECTIVE_PLANE = SurfaceType(1, False)


@dataclass(frozen=True)
class SurfaceCheck:
    closed: bool
    failed: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.closed


def is_closed_surface(K: Complex) -> SurfaceCheck:
    """Check the three conditions for ``K`` to triangulate a connected closed surface.

    Conditions are tested in order: every pair lies in exactly two facets,
    every vertex link is one cycle, and the facets are connected through
    shared pairs. A rejection names the first failing condition and a witness.
    """
    if not K.facets:
        raise ValueError("empty complex")
    for p, fs in sorted(K.pair_facets.items()):
        if len(fs) != 2:
            return SurfaceCheck(False, "pair", {"pair": p, "facets": len(fs)})
    for v in sorted(K.vertices):
        link = K.vertex_link(v)
        start = next(iter(link))
        seen = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for y in link[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        if len(seen) != len(link) or len(link) < 3:
            return SurfaceCheck(False, "vertex", {"vertex": v, "link_size": len(link)})
    order = K.sorted_facets()
    seen_f = {order[0]}
    queue = deque([order[0]])
    while queue:
        f = queue.popleft()
        for p in combinations(f, 2):
            for g in K.pair_facets[p]:
                if g not in seen_f:
                    seen_f.add(g)
                    queue.append(g)
    if len(seen_f) != len(order):
        rest = sorted(set(order) - seen_f)
        return SurfaceCheck(False, "connectivity", {"reached": len(seen_f), "first_unreached": rest[0]})
    return SurfaceCheck(True)


def euler_characteristic(K: Complex) -> int:
    return len(K.vertices) - len(K.pair_facets) + len(K.facets)


def _require_surface(K: Complex) -> None:
    check = is_closed_surface(K)
    if not check:
        raise NotASurface(f"not a closed surface: {check.failed} {check.witness}")


def orientability(K: Complex, start: Triple | None = None, *, checked: bool = False) -> bool:
    """Propagate a cyclic orientation across shared pairs; False on the first conflict."""
    if not checked:
        _require_surface(K)
    order = K.sorted_facets()
    first = order[0] if start is None else triple(*start)
    if first not in K.facets:
        raise ValueError(f"start facet {first} not in complex")
    orient: dict[Triple, tuple[int, int, int]] = {first: first}
    queue = deque([first])
    while queue:
        f = queue.popleft()
        a, b, c = orient[f]
        for x, y in ((a, b), (b, c), (c, a)):
            # a neighbour across xy must traverse it as y -> x
            for g in K.pair_facets[(min(x, y), max(x, y))]:
                if g == f:
                    continue
                z = next(u for u in g if u != x and u != y)
                want = (y, x, z)
                if g in orient:
                    if not _same_cycle(orient[g], want):
                        return False
                else:
                    orient[g] = want
                    queue.append(g)
    return True


def _same_cycle(s: tuple[int, int, int], t: tuple[int, int, int]) -> bool:
    return t in (s, (s[1], s[2], s[0]), (s[2], s[0], s[1]))


def classify(K: Complex) -> SurfaceType:
    _require_surface(K)
    return SurfaceType(euler_characteristic(K), orientability(K, checked=True))


def spans(K: Complex, H: ThreeGraph) -> bool:
    missing = [f for f in K.sorted_facets() if f not in H.edges]
    if missing:
        raise ValueError(f"facet {missing[0]} is not an edge of the host")
    return K.vertices == frozenset(range(H.n))


def connected_sum_glue(
    K1: Complex, K2: Complex, tube: Complex, removed: tuple[Sequence[int], Sequence[int]]
) -> Complex:
    """Glue ``K1`` and ``K2`` through a spherical tube sharing one facet with each.

    The result is the symmetric difference of the three facet sets. Beyond
    the facet conditions, ``K1`` and ``K2`` must be vertex-disjoint and the
    tube may meet each of them only in the vertices of its removed facet;
    otherwise the glued complex can pinch.
    """
    f1, f2 = triple(*removed[0]), triple(*removed[1])
    if f1 not in K1.facets:
        raise ValueError(f"removed facet {f1} is not in K1")
    if f2 not in K2.facets:
        raise ValueError(f"removed facet {f2} is not in K2")
    if f1 not in tube.facets or f2 not in tube.facets:
        raise ValueError("tube must contain both removed facets")
    if K1.vertices & K2.vertices:
        raise ValueError("K1 and K2 must be vertex-disjoint")
    if tube.vertices & K1.vertices != set(f1) or tube.vertices & K2.vertices != set(f2):
        raise ValueError("tube may meet K1 and K2 only in the removed facets")
    if not is_closed_surface(tube) or classify(tube) != SPHERE:
        raise ValueError("tube must be a sphere")
    if (K1.facets & tube.facets) - {f1} or (K2.facets & tube.facets) - {f2}:
        raise ValueError("complexes share facets other than the removed pair")
    return Complex(K1.facets ^ K2.facets ^ tube.facets)


def classification_report(K: Complex) -> dict:
    check = is_closed_surface(K)
    out = {"closed": check.closed, "euler": euler_characteristic(K), "orientable": None, "name": None, "witness": check.witness}
    if check:
        kind = classify(K)
        out.update(orientable=kind.orientable, name=kind.name)
    return out
