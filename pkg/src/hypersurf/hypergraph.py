"""3-graphs, graphs and the pair-level combinatorics used everywhere else.

Vertices are the integers ``0..n-1``. Triples and pairs are stored as sorted
tuples so they can be used directly as dictionary keys.
"""

from __future__ import annotations

import math
import random
from collections import defaultdict
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

Pair = tuple[int, int]
Triple = tuple[int, int, int]

EXHAUSTIVE_LIMIT = 10**6
DEFAULT_CYCLE_NODES = 10**7


def triple(a: int, b: int, c: int) -> Triple:
    t = tuple(sorted((a, b, c)))
    if t[0] == t[1] or t[1] == t[2]:
        raise ValueError(f"triple needs 3 distinct vertices, got {(a, b, c)}")
    return t  # type: ignore[return-value]


def pair(a: int, b: int) -> Pair:
    if a == b:
        raise ValueError(f"pair needs 2 distinct vertices, got {(a, b)}")
    return (a, b) if a < b else (b, a)


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class ThreeGraph:
    """A 3-uniform hypergraph on ``range(n)``."""

    n: int
    edges: frozenset[Triple]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for e in edges:
            if len(e) != 3:
                raise ValueError(f"not a triple: {e!r}")
            t = triple(*e)
            if t[0] < 0 or t[2] >= n:
                raise ValueError(f"triple {t} out of range for n={n}")
            canon.add(t)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def complete(cls, n: int) -> ThreeGraph:
        return cls(n, combinations(range(n), 3))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Triple]:
        return sorted(self.edges)

    @cached_property
    def pair_index(self) -> dict[Pair, tuple[int, ...]]:
        """Map each pair to the sorted tuple of vertices completing it to an edge."""
        index: dict[Pair, list[int]] = defaultdict(list)
        for a, b, c in self.edges:
            index[(a, b)].append(c)
            index[(a, c)].append(b)
            index[(b, c)].append(a)
        return {p: tuple(sorted(ws)) for p, ws in index.items()}

    @cached_property
    def edges_at(self) -> tuple[tuple[Triple, ...], ...]:
        at: list[list[Triple]] = [[] for _ in range(self.n)]
        for e in sorted(self.edges):
            for v in e:
                at[v].append(e)
        return tuple(tuple(x) for x in at)

    def degree(self, v: int) -> int:
        return len(self.edges_at[v])

    def neighbourhood(self, x: int, y: int) -> tuple[int, ...]:
        return self.pair_index.get(pair(x, y), ())

    def restrict(self, edges: Iterable[Triple]) -> ThreeGraph:
        return ThreeGraph(self.n, edges)

    def induced(self, vertices: Iterable[int]) -> ThreeGraph:
        keep = set(vertices)
        return ThreeGraph(self.n, (e for e in self.edges if keep.issuperset(e)))

    def relabel(self, perm: Sequence[int]) -> ThreeGraph:
        return ThreeGraph(self.n, ((perm[a], perm[b], perm[c]) for a, b, c in self.edges))

    def __repr__(self) -> str:
        return f"ThreeGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Graph:
    """A simple graph on ``range(n)`` with bitset adjacency rows."""

    n: int
    edges: frozenset[Pair]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        canon = set()
        for e in edges:
            a, b = e
            p = pair(a, b)
            if p[0] < 0 or p[1] >= n:
                raise ValueError(f"pair {p} out of range for n={n}")
            canon.add(p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, combinations(range(n), 2))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> Graph:
        return cls(a + b, ((i, a + j) for i in range(a) for j in range(b)))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for a, b in self.edges:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return tuple(rows)

    def neighbours(self, x: int) -> list[int]:
        return list(bits(self.adj[x]))

    def degree(self, x: int) -> int:
        return popcount(self.adj[x])

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def sorted_edges(self) -> list[Pair]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def _check_vertex(H: ThreeGraph | Graph, v: int) -> None:
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v} out of range for n={H.n}")


def codegree(H: ThreeGraph, x: int, y: int) -> int:
    _check_vertex(H, x)
    _check_vertex(H, y)
    if x == y:
        raise ValueError("codegree needs two distinct vertices")
    return len(H.neighbourhood(x, y))


def min_codegree(H: ThreeGraph) -> int:
    if H.n < 2:
        raise ValueError("minimum codegree needs at least two vertices")
    index = H.pair_index
    if len(index) < H.n * (H.n - 1) // 2:
        return 0
    return min(len(ws) for ws in index.values())


def link_graph(H: ThreeGraph, v: int) -> Graph:
    """The link of ``v``; kept on ``range(n)`` with ``v`` isolated."""
    _check_vertex(H, v)
    return Graph(H.n, ([x for x in e if x != v] for e in H.edges_at[v]))


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


@dataclass(frozen=True)
class TightComponent:
    edges: frozenset[Triple]
    vertices: frozenset[int]

    @property
    def smallest(self) -> Triple:
        return min(self.edges)


@dataclass(frozen=True)
class TightPartition:
    component_of: dict[Triple, int] = field(hash=False)
    components: tuple[TightComponent, ...]

    def __len__(self) -> int:
        return len(self.components)

    def spanning(self, n: int) -> list[int]:
        return [i for i, c in enumerate(self.components) if len(c.vertices) == n]


def tight_components(H: ThreeGraph) -> TightPartition:
    """Classes of the transitive closure of touching, numbered by smallest triple.

    Two completions of the same pair touch, so it suffices to union the edge
    lists of every pair.
    """
    order = H.sorted_edges()
    ident = {e: i for i, e in enumerate(order)}
    uf = UnionFind(len(order))
    for (a, b), ws in H.pair_index.items():
        first = ident[triple(a, b, ws[0])]
        for w in ws[1:]:
            uf.union(first, ident[triple(a, b, w)])
    groups: dict[int, list[Triple]] = defaultdict(list)
    for e in order:
        groups[uf.find(ident[e])].append(e)
    comps = sorted(groups.values(), key=lambda es: es[0])
    component_of = {}
    out = []
    for cid, es in enumerate(comps):
        for e in es:
            component_of[e] = cid
        out.append(TightComponent(frozenset(es), frozenset(v for e in es for v in e)))
    return TightPartition(component_of, tuple(out))


def touching_pairs(H: ThreeGraph) -> Iterator[tuple[Triple, Triple]]:
    """Yield every unordered pair of edges meeting in exactly two vertices, once."""
    for (a, b), ws in sorted(H.pair_index.items()):
        for w1, w2 in combinations(ws, 2):
            yield triple(a, b, w1), triple(a, b, w2)


def count_4cycles(G: Graph) -> int:
    # every C4 has two diagonals, each a pair with both other vertices as common neighbours
    adj = G.adj
    total = 0
    for a in range(G.n):
        for b in range(a + 1, G.n):
            c = popcount(adj[a] & adj[b])
            total += c * (c - 1) // 2
    return total // 2


@dataclass(frozen=True)
class CycleResult:
    cycle: tuple[int, ...] | None
    exhaustive: bool
    nodes: int

    @property
    def status(self) -> str:
        if self.cycle is not None:
            return "found"
        return "none" if self.exhaustive else "exhausted"


def find_cycle(G: Graph, length: int, max_nodes: int = DEFAULT_CYCLE_NODES) -> CycleResult:
    """Depth-first search for a cycle on exactly ``length`` distinct vertices.

    Each cycle is anchored at its smallest vertex and traversed in the
    direction whose second vertex is smaller than its last one.
    """
    if length < 3:
        raise ValueError("cycles have length at least 3")
    adj = G.adj
    nodes = 0

    for s in range(G.n):
        higher = ~((1 << (s + 1)) - 1)
        if popcount(adj[s] & higher) < 2:
            continue
        allowed = higher & ((1 << G.n) - 1)
        path = [s]
        # stack of (candidate mask) per depth
        stack = [adj[s] & allowed]
        used = 1 << s
        while stack:
            cand = stack[-1] & ~used
            if not cand:
                stack.pop()
                used &= ~(1 << path.pop())
                continue
            low = cand & -cand
            stack[-1] &= ~low
            v = low.bit_length() - 1
            nodes += 1
            if nodes > max_nodes:
                return CycleResult(None, False, nodes)
            depth = len(path) + 1
            if depth == length:
                if adj[v] >> s & 1 and path[1] < v:
                    return CycleResult(tuple(path + [v]), True, nodes)
                continue
            if popcount(allowed & ~used & ~low) < length - depth:
                continue
            path.append(v)
            used |= low
            stack.append(adj[v] & allowed)
    return CycleResult(None, True, nodes)


def find_even_cycle(G: Graph, length: int, max_nodes: int = DEFAULT_CYCLE_NODES) -> CycleResult:
    if length < 4 or length % 2:
        raise ValueError("even cycle length must be an even number >= 4")
    return find_cycle(G, length, max_nodes)


@dataclass(frozen=True)
class IntersectionResult:
    indices: tuple[int, ...]
    intersection: frozenset
    mode: str
    seed: int | None
    lemma_hypothesis: bool | None = None
    lemma_bound: float | None = None

    @property
    def size(self) -> int:
        return len(self.intersection)

    @property
    def bound_met(self) -> bool | None:
        if self.lemma_bound is None:
            return None
        return self.size >= self.lemma_bound


def best_intersection(
    sets: Sequence[Iterable],
    r: int,
    *,
    universe: Iterable | None = None,
    gamma: float | None = None,
    seed: int = 0,
    samples: int = 20000,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> IntersectionResult:
    """Pick ``r`` of the sets with the largest common intersection.

    Exhaustive (lexicographically first maximiser) while ``C(m, r)`` stays
    within ``exhaustive_limit``; otherwise the best of ``samples`` seeded random
    ``r``-subsets. With ``gamma`` given, the averaging bound
    ``gamma**r * |universe| / 2`` is evaluated and reported, never assumed.
    """
    m = len(sets)
    if r > m:
        raise ValueError(f"cannot choose {r} of {m} sets")
    if r < 1:
        raise ValueError("r must be positive")
    members = [set(s) for s in sets]
    elems = sorted(set().union(*members), key=repr) if members else []
    pos = {x: i for i, x in enumerate(elems)}
    masks = [sum(1 << pos[x] for x in s) for s in members]

    if math.comb(m, r) <= exhaustive_limit:
        mode, used_seed = "exhaustive", None
        best_mask, best_idx = -1, None
        full = (1 << len(elems)) - 1

        def rec(start: int, chosen: list[int], mask: int) -> None:
            nonlocal best_mask, best_idx
            if best_idx is not None and popcount(mask) <= popcount(best_mask):
                return
            if len(chosen) == r:
                best_mask, best_idx = mask, tuple(chosen)
                return
            for i in range(start, m - (r - len(chosen)) + 1):
                chosen.append(i)
                rec(i + 1, chosen, mask & masks[i])
                chosen.pop()

        rec(0, [], full)
        assert best_idx is not None
    else:
        mode, used_seed = "sampled", seed
        rng = random.Random(seed)
        best_mask, best_idx = -1, None
        for _ in range(samples):
            idx = tuple(sorted(rng.sample(range(m), r)))
            mask = masks[idx[0]]
            for i in idx[1:]:
                mask &= masks[i]
            if best_idx is None or popcount(mask) > popcount(best_mask):
                best_mask, best_idx = mask, idx

    inter = frozenset(elems[i] for i in bits(best_mask))
    hyp = bound = None
    if gamma is not None:
        size = len(set(universe)) if universe is not None else len(elems)
        hyp = sum(len(s) for s in members) >= gamma * m * size
        bound = gamma**r * size / 2
    return IntersectionResult(best_idx, inter, mode, used_seed, hyp, bound)
