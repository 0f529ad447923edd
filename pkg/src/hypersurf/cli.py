"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import random
import sys
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path

from . import acceptance
from .constructions import GENERATORS, is_three_partite, random_three_graph
from .hypergraph import ThreeGraph, min_codegree, tight_components
from .io import ParseError, format_3g, format_3gc, format_json, parse_3g, parse_graph
from .search import SearchBudget, connectibility_census, find_spanning_surface
from .toolkit import merge_colouring, match_partition
from .topology import Complex, classification_report


class UsageError(Exception):
    pass


def _version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "unknown"


def _emit(args: argparse.Namespace, payload: dict) -> None:
    if args.human:
        for key, value in payload.items():
            print(f"{key}: {value}")
    else:
        print(json.dumps(payload, sort_keys=False))


def _read_host(path: str) -> ThreeGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_3g(text)


def _budget(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(args.budget_nodes, args.budget_secs)


def _need_seed(args: argparse.Namespace, what: str) -> int:
    if args.seed is None:
        raise UsageError(f"{what} is randomized; pass --seed")
    return args.seed


def cmd_generate(args: argparse.Namespace) -> int:
    params: dict[str, object] = {}
    if args.name == "random":
        seed = _need_seed(args, "generate random")
        if args.n is None or args.p is None:
            raise UsageError("generate random needs --n and --p")
        H = random_three_graph(args.n, args.p, random.Random(seed))
        params = {"n": args.n, "p": args.p, "seed": seed}
    else:
        if args.name not in GENERATORS:
            raise UsageError(f"unknown generator {args.name!r}; choose from {', '.join(sorted(GENERATORS))} or random")
        fn, names = GENERATORS[args.name]
        for key in names:
            value = getattr(args, key)
            if value is None:
                raise UsageError(f"generator {args.name} needs --{key}")
            params[key] = value
        made = fn(*(params[k] for k in names))
        H = made if isinstance(made, ThreeGraph) else ThreeGraph(max(made.vertices) + 1, made.facets)
    comments = [f"generator: {args.name}", "params: " + json.dumps(params, sort_keys=True), f"version: {_version()}"]
    text = format_json(H) + "\n" if args.format == "json" else format_3g(H, comments)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    H = _read_host(args.file)
    parts = tight_components(H)
    colouring = is_three_partite(H)
    _emit(
        args,
        {
            "n": H.n,
            "m": H.m,
            "min_codegree": min_codegree(H),
            "components": len(parts),
            "component_sizes": [len(c.edges) for c in parts.components],
            "component_spans": [len(c.vertices) for c in parts.components],
            "spanning_components": parts.spanning(H.n),
            "three_partite": colouring is not None,
            "three_colouring": list(colouring) if colouring else None,
        },
    )
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    H = _read_host(args.file)
    if not H.edges:
        raise UsageError("no facets to classify")
    report = classification_report(Complex(H.edges))
    _emit(args, report)
    return 0 if report["closed"] else 1


def cmd_search(args: argparse.Namespace) -> int:
    H = _read_host(args.file)
    target = None if args.target == "any" else args.target
    res = find_spanning_surface(H, target, _budget(args), workers=args.workers, seed=args.seed)
    _emit(args, res.to_json())
    return res.exit_code


def cmd_colour(args: argparse.Namespace) -> int:
    H = _read_host(args.file)
    res = merge_colouring(H, args.threshold)
    colouring = res.as_edge_colouring()
    log = [{"merged": [m.first, m.second], "count": m.count, "into": m.into} for m in res.log]
    text = format_3gc(colouring, [f"merge threshold: {args.threshold}", f"merges: {len(log)}"])
    if args.output:
        Path(args.output).write_text(text)
        _emit(args, {"output": args.output, "merges": log, "classes": len(res.classes()), **colouring.stats()})
    else:
        sys.stdout.write(text)
        print(json.dumps({"merges": log}), file=sys.stderr)
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    H = _read_host(args.file)
    res = connectibility_census(H, args.e, args.f, args.l_max, _budget(args))
    _emit(args, res.to_json(H.n))
    return 0 if res.exhaustive else 3


def cmd_matchpart(args: argparse.Namespace) -> int:
    seed = _need_seed(args, "matchpart")
    text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
    part = match_partition(parse_graph(text), args.eps, seed=seed)
    _emit(args, part.to_json())
    return 0


def cmd_verify_paper(args: argparse.Namespace) -> int:
    results = acceptance.run_all(echo=print)
    failed = [r for r in results if not r.passed]
    if failed:
        print("failed: " + ", ".join(f"{r.number} {r.name}" for r in failed))
        return 1
    print("all criteria pass")
    return 0


def _triple(text: str) -> tuple[int, int, int]:
    parts = text.replace(",", " ").split()
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three vertices, got {text!r}")
    a, b, c = (int(p) for p in parts)
    return a, b, c


def _add_common(p: argparse.ArgumentParser, top: bool) -> None:
    # subcommand copies must not clobber values given before the subcommand
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=d(None))
    p.add_argument("--budget-nodes", type=int, default=d(10**7))
    p.add_argument("--budget-secs", type=float, default=d(60.0))
    p.add_argument("--workers", type=int, default=d(1))
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="human", action="store_false", default=d(False), help="JSON-lines output (default)")
    mode.add_argument("--human", dest="human", action="store_true", default=d(False), help="key: value output")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, top=False)

    p = argparse.ArgumentParser(prog="hypersurf", description="Surfaces in 3-graphs at desk scale.")
    _add_common(p, top=True)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="write a generated 3-graph")
    g.add_argument("name")
    g.add_argument("--n", type=int)
    g.add_argument("--chi", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--c", type=int)
    g.add_argument("--p", type=float)
    g.add_argument("--format", choices=("3g", "json"), default="3g")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    for name, fn, text in (
        ("check", cmd_check, "codegree, components and 3-partiteness"),
        ("classify", cmd_classify, "treat the edges as facets and classify"),
    ):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("file")
        s.set_defaults(func=fn)

    s = sub.add_parser("search", parents=[common], help="search for a spanning surface")
    s.add_argument("file")
    s.add_argument("--target", default="sphere", help="sphere, torus, projective-plane, klein-bottle, torus-sum(g), projective-sum(k) or any")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("colour", parents=[common], help="merge tight components into colour classes")
    s.add_argument("file")
    s.add_argument("--threshold", type=int, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_colour)

    s = sub.add_parser("census", parents=[common], help="connectibility census for two disjoint edges")
    s.add_argument("file")
    s.add_argument("--e", type=_triple, required=True)
    s.add_argument("--f", type=_triple, required=True)
    s.add_argument("--l-max", type=int, default=2)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("matchpart", parents=[common], help="Z/B/C/D partition of a graph file")
    s.add_argument("file")
    s.add_argument("--eps", type=float, required=True)
    s.set_defaults(func=cmd_matchpart)

    s = sub.add_parser("verify-paper", parents=[common], help="run the acceptance suite")
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
