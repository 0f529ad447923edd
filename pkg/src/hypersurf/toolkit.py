"""Edge colourings, colour merging and the match-partition procedure."""

from __future__ import annotations

import random
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations

from .hypergraph import Graph, ThreeGraph, Triple, min_codegree, tight_components, triple
from .matching import matching_edges, maximum_matching


class Colour(str, Enum):
    RED = "R"
    GREEN = "G"
    UNCOLOURED = "U"


@dataclass(frozen=True)
class EdgeColouring:
    host: ThreeGraph
    colour_of: Mapping[Triple, Colour]

    def __post_init__(self) -> None:
        fixed = {triple(*e): Colour(c) for e, c in self.colour_of.items()}
        if set(fixed) != set(self.host.edges):
            extra = sorted(set(fixed) - self.host.edges)
            missing = sorted(self.host.edges - set(fixed))
            raise ValueError(f"colouring domain differs from the edge set (extra {extra[:3]}, missing {missing[:3]})")
        object.__setattr__(self, "colour_of", fixed)

    @classmethod
    def uniform(cls, H: ThreeGraph, colour: Colour) -> EdgeColouring:
        return cls(H, dict.fromkeys(H.edges, colour))

    @cached_property
    def counts(self) -> Counter:
        return Counter(self.colour_of.values())

    @cached_property
    def cross_touching(self) -> int:
        """Unordered touching pairs with one red and one green edge."""
        total = 0
        for (a, b), comp in self.host.pair_index.items():
            reds = greens = 0
            for w in comp:
                c = self.colour_of[triple(a, b, w)]
                reds += c is Colour.RED
                greens += c is Colour.GREEN
            total += reds * greens
        return total

    @cached_property
    def red_degree(self) -> tuple[int, ...]:
        deg = [0] * self.host.n
        for e, c in self.colour_of.items():
            if c is Colour.RED:
                for v in e:
                    deg[v] += 1
        return tuple(deg)

    def low_red(self, threshold: float) -> int:
        return sum(d < threshold for d in self.red_degree)

    def stats(self, threshold: float | None = None) -> dict:
        out = {
            "red": self.counts[Colour.RED],
            "green": self.counts[Colour.GREEN],
            "uncoloured": self.counts[Colour.UNCOLOURED],
            "cross_touching": self.cross_touching,
        }
        if threshold is not None:
            out["low_red"] = self.low_red(threshold)
        return out


@dataclass(frozen=True)
class Clause:
    name: str
    value: float
    bound: float
    holds: bool

    @property
    def margin(self) -> float:
        # positive when the clause holds with room to spare
        return self.bound - self.value if self.name in ("uncoloured", "cross_touching") else self.value - self.bound


@dataclass(frozen=True)
class ColouringReport:
    clauses: tuple[Clause, ...]

    @property
    def passes(self) -> bool:
        return all(c.holds for c in self.clauses)

    def __getitem__(self, name: str) -> Clause:
        return next(c for c in self.clauses if c.name == name)

    def to_json(self) -> dict:
        return {
            "passes": self.passes,
            "clauses": {c.name: {"value": c.value, "bound": c.bound, "holds": c.holds, "margin": c.margin} for c in self.clauses},
        }


def check_colouring(H: ThreeGraph, c: EdgeColouring, eps: float, mu: float) -> ColouringReport:
    """Evaluate the four clauses of an (eps, mu)-colouring exactly."""
    if c.host.edges != H.edges or c.host.n != H.n:
        raise ValueError("colouring belongs to a different host")
    n = H.n
    d2 = min_codegree(H)
    low = c.low_red(eps * n**2)
    clauses = (
        Clause("min_codegree", d2, (1 / 3 + mu) * n, d2 >= (1 / 3 + mu) * n),
        Clause("uncoloured", c.counts[Colour.UNCOLOURED], eps * n**3, c.counts[Colour.UNCOLOURED] <= eps * n**3),
        Clause("cross_touching", c.cross_touching, eps * n**4, c.cross_touching <= eps * n**4),
        Clause("low_red_vertices", low, mu * n / 4, low >= mu * n / 4),
    )
    return ColouringReport(clauses)


def green_link(H: ThreeGraph, c: EdgeColouring, v: int) -> Graph:
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v} out of range")
    return Graph(H.n, (tuple(u for u in e if u != v) for e, col in c.colour_of.items() if v in e and col is Colour.GREEN))


@dataclass(frozen=True)
class Merge:
    first: int
    second: int
    count: int
    into: int


@dataclass
class MergeResult:
    """Final class of every edge plus the merge log."""

    host: ThreeGraph
    class_of: dict[Triple, int]
    log: list[Merge] = field(default_factory=list)
    initial_classes: int = 0

    def classes(self) -> dict[int, list[Triple]]:
        out: dict[int, list[Triple]] = {}
        for e in sorted(self.class_of):
            out.setdefault(self.class_of[e], []).append(e)
        return out

    def cross_counts(self) -> dict[tuple[int, int], int]:
        return _cross_counts(self.host, self.class_of)

    def as_edge_colouring(self) -> EdgeColouring:
        """Largest class green, second largest red, the rest uncoloured."""
        ranked = sorted(self.classes().items(), key=lambda kv: (-len(kv[1]), kv[1][0]))
        colour = {cls: Colour.UNCOLOURED for cls, _ in ranked}
        if ranked:
            colour[ranked[0][0]] = Colour.GREEN
        if len(ranked) > 1:
            colour[ranked[1][0]] = Colour.RED
        return EdgeColouring(self.host, {e: colour[k] for e, k in self.class_of.items()})


def _cross_counts(H: ThreeGraph, class_of: Mapping[Triple, int]) -> dict[tuple[int, int], int]:
    out: Counter = Counter()
    for (a, b), comp in H.pair_index.items():
        here = Counter(class_of[triple(a, b, w)] for w in comp)
        for c1, c2 in combinations(sorted(here), 2):
            out[(c1, c2)] += here[c1] * here[c2]
    return dict(out)


def merge_colouring(H: ThreeGraph, merge_threshold: int, initial: Mapping[Triple, int] | None = None) -> MergeResult:
    """Merge colour classes while some pair of them has many touching cross pairs.

    Starts from the tight components unless an ``initial`` class map is
    given. Each step merges the pair with the largest count (ties broken
    lexicographically) into a fresh class id.
    """
    if merge_threshold < 1:
        raise ValueError("merge threshold must be at least 1")
    if initial is None:
        parts = tight_components(H)
        class_of = dict(parts.component_of)
    else:
        class_of = {triple(*e): int(k) for e, k in initial.items()}
        if set(class_of) != set(H.edges):
            raise ValueError("initial classes must cover exactly the edge set")
    result = MergeResult(H, class_of, [], len(set(class_of.values())))
    fresh = max(class_of.values(), default=-1) + 1
    while True:
        counts = _cross_counts(H, class_of)
        ok = [(cnt, key) for key, cnt in counts.items() if cnt >= merge_threshold]
        if not ok:
            break
        best = min(ok, key=lambda t: (-t[0], t[1]))
        (c1, c2), cnt = best[1], best[0]
        for e, k in class_of.items():
            if k == c1 or k == c2:
                class_of[e] = fresh
        result.log.append(Merge(c1, c2, cnt, fresh))
        fresh += 1
    return result


class MatchPartitionError(AssertionError):
    """A clause of the partition failed; carries the offending partition."""

    def __init__(self, message: str, partition: MatchPartition):
        super().__init__(message)
        self.partition = partition


@dataclass(frozen=True)
class MatchPartition:
    Z: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]
    D: frozenset[int]
    matching_Z: tuple[tuple[int, int], ...]
    matching_CD: tuple[tuple[int, int], ...]
    boundary_edge_count: int
    rounds: int
    eps: float
    n: int
    attempt: int = 0

    def to_json(self) -> dict:
        return {
            "Z": sorted(self.Z),
            "B": sorted(self.B),
            "C": sorted(self.C),
            "D": sorted(self.D),
            "matching_Z": [list(p) for p in self.matching_Z],
            "matching_CD": [list(p) for p in self.matching_CD],
            "boundary_edge_count": self.boundary_edge_count,
            "boundary_bound": self.eps * self.n**2,
            "rounds": self.rounds,
            "attempt": self.attempt,
        }


def boundary_edges(G: Graph, left: set[int], right: set[int]) -> int:
    """|E(left, right)| with edges inside ``left & right`` counted once."""
    total = 0
    for a, b in G.sorted_edges():
        if (a in left and b in right) or (b in left and a in right):
            total += 1
    return total


def match_partition(G: Graph, eps: float, *, seed: int = 0, attempts: int = 32) -> MatchPartition:
    """Split V(G) into Z, B, C, D around a maximum matching M.

    B is the set of vertices M leaves exposed. Each round collects the
    remaining matched vertices with at least eps*n/2 neighbours in B and the
    earlier D, provided there are at least eps*n/2 of them, into C; their
    partners go to D. Z is what is left of V(M).

    The clauses are guaranteed only once n is large compared with 1/eps.
    Below that, a maximum matching can put both ends of one of its edges
    into C, so the procedure is retried with other maximum matchings
    (found on seeded relabellings) before giving up.
    """
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    if attempts < 1:
        raise ValueError("attempts must be positive")
    rng = random.Random(seed)
    order = list(range(G.n))
    err: MatchPartitionError | None = None
    for attempt in range(attempts):
        if attempt:
            rng.shuffle(order)
        perm = Graph(G.n, ((order[a], order[b]) for a, b in G.sorted_edges()))
        back = {order[v]: v for v in range(G.n)}
        mate = {back[v]: back[w] for v, w in maximum_matching(perm).items()}
        part = _partition_from(G, eps, mate, attempt)
        try:
            _assert_clauses(G, part)
        except MatchPartitionError as exc:
            err = exc
            continue
        return part
    assert err is not None
    raise err


def _partition_from(G: Graph, eps: float, mate: dict[int, int], attempt: int) -> MatchPartition:
    n = G.n
    B = {v for v in range(n) if v not in mate}
    C: set[int] = set()
    D: set[int] = set()
    nbrs = [set(G.neighbours(v)) for v in range(n)]
    threshold = eps * n / 2
    rounds = 0
    while True:
        target = B | D
        pool = [v for v in sorted(mate) if v not in C and v not in D]
        Ci = {v for v in pool if len(nbrs[v] & target) >= threshold}
        if not Ci or len(Ci) < threshold:
            break
        C |= Ci
        D |= {mate[v] for v in Ci}
        rounds += 1
    Z = set(mate) - C - D
    return MatchPartition(
        frozenset(Z),
        frozenset(B),
        frozenset(C),
        frozenset(D),
        tuple(p for p in matching_edges(mate) if p[0] in Z and p[1] in Z),
        tuple(sorted((c, mate[c]) for c in C)),
        boundary_edges(G, B | D, Z | B | D),
        rounds,
        eps,
        n,
        attempt,
    )


def _assert_clauses(G: Graph, p: MatchPartition) -> None:
    sets = (p.Z, p.B, p.C, p.D)
    if sum(map(len, sets)) != G.n or frozenset().union(*sets) != frozenset(range(G.n)):
        raise MatchPartitionError("Z, B, C, D do not partition the vertex set", p)
    covered = [v for e in p.matching_Z for v in e]
    if sorted(covered) != sorted(p.Z) or not all(G.has_edge(*e) for e in p.matching_Z):
        raise MatchPartitionError("no perfect matching on Z", p)
    cs = [c for c, _ in p.matching_CD]
    ds = [d for _, d in p.matching_CD]
    if set(cs) != p.C or set(ds) != p.D or len(set(ds)) != len(ds) or not all(G.has_edge(*e) for e in p.matching_CD):
        raise MatchPartitionError("C and D are not perfectly matched", p)
    if p.boundary_edge_count > p.eps * G.n**2:
        raise MatchPartitionError(f"boundary {p.boundary_edge_count} exceeds {p.eps * G.n**2:.3f}", p)
