"""Text formats: ``.3g`` 3-graphs, graphs, ``.3gc`` colourings and a JSON envelope.

A ``.3g`` file has an ``n m`` header line followed by ``m`` lines ``a b c``;
blank lines and ``#`` comments are ignored. Graph files are the same with
pairs. A ``.3gc`` file suffixes every edge line with ``R``, ``G`` or ``U``.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from pathlib import Path

from .hypergraph import Graph, ThreeGraph
from .toolkit import Colour, EdgeColouring
from .topology import Complex


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((no, body.split()))
    return out


def _ints(tokens: list[str], no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", no) from None


def _parse_records(text: str, arity: int, suffix: bool = False) -> tuple[int, list[tuple[int, ...]], list[str]]:
    rows = _lines(text)
    if not rows:
        raise ParseError("empty input", 1)
    no, head = rows[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", no)
    n, m = _ints(head, no)
    if n < 0 or m < 0:
        raise ParseError("negative header value", no)
    recs, tags = [], []
    for no, toks in rows[1:]:
        width = arity + suffix
        if len(toks) != width:
            raise ParseError(f"expected {width} fields, got {len(toks)}", no)
        vals = _ints(toks[:arity], no)
        if any(not 0 <= v < n for v in vals):
            raise ParseError(f"vertex out of range 0..{n - 1}", no)
        if len(set(vals)) != arity:
            raise ParseError("repeated vertex in record", no)
        recs.append(tuple(vals))
        if suffix:
            if toks[-1] not in ("R", "G", "U"):
                raise ParseError(f"colour must be R, G or U, got {toks[-1]!r}", no)
            tags.append(toks[-1])
    if len(recs) != m:
        raise ParseError(f"header announces {m} records, found {len(recs)}", rows[0][0])
    if len({tuple(sorted(r)) for r in recs}) != m:
        raise ParseError("duplicate record")
    return n, recs, tags


def parse_3g(text: str) -> ThreeGraph:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_json(stripped)
    n, recs, _ = _parse_records(text, 3)
    return ThreeGraph(n, recs)


def parse_json(text: str) -> ThreeGraph:
    try:
        doc = json.loads(text)
        return ThreeGraph(int(doc["n"]), doc["edges"])
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON envelope: {exc}") from None


def parse_graph(text: str) -> Graph:
    n, recs, _ = _parse_records(text, 2)
    return Graph(n, recs)


def parse_3gc(text: str) -> tuple[ThreeGraph, EdgeColouring]:
    n, recs, tags = _parse_records(text, 3, suffix=True)
    H = ThreeGraph(n, recs)
    return H, EdgeColouring(H, {tuple(sorted(r)): Colour(t) for r, t in zip(recs, tags)})


def _header(comments: Iterable[str]) -> str:
    return "".join(f"# {c}\n" for c in comments)


def format_3g(H: ThreeGraph, comments: Iterable[str] = ()) -> str:
    body = "".join(f"{a} {b} {c}\n" for a, b, c in H.sorted_edges())
    return f"{_header(comments)}{H.n} {H.m}\n{body}"


def format_graph(G: Graph, comments: Iterable[str] = ()) -> str:
    edges = G.sorted_edges()
    return f"{_header(comments)}{G.n} {len(edges)}\n" + "".join(f"{a} {b}\n" for a, b in edges)


def format_3gc(c: EdgeColouring, comments: Iterable[str] = ()) -> str:
    H = c.host
    body = "".join(f"{a} {b} {d} {c.colour_of[(a, b, d)].value}\n" for a, b, d in H.sorted_edges())
    return f"{_header(comments)}{H.n} {H.m}\n{body}"


def format_json(H: ThreeGraph) -> str:
    return json.dumps({"n": H.n, "edges": [list(e) for e in H.sorted_edges()]})


def complex_host(K: Complex) -> ThreeGraph:
    """The 3-graph whose edges are the facets, on vertices 0..max."""
    n = max(K.vertices) + 1 if K.facets else 0
    return ThreeGraph(n, K.facets)


def read_3g(path: str | Path) -> ThreeGraph:
    return parse_3g(Path(path).read_text())
