"""Spanning-sphere success rate on random 3-graphs with min codegree above n/3.

Writes one JSON line per sample, then a summary line.
"""

import argparse
import json
import random
from dataclasses import asdict, dataclass

from hypersurf.constructions import random_three_graph
from hypersurf.hypergraph import min_codegree
from hypersurf.search import SearchBudget, find_spanning_sphere


@dataclass(frozen=True)
class ProbeConfig:
    samples: int = 200
    n_min: int = 4
    n_max: int = 9
    p_min: float = 0.3
    seed: int = 20240917
    max_nodes: int = 2_000_000
    time_cap: float = 30.0


def probe(cfg: ProbeConfig):
    rng = random.Random(cfg.seed)
    budget = SearchBudget(cfg.max_nodes, cfg.time_cap)
    done = 0
    while done < cfg.samples:
        n = rng.randint(cfg.n_min, cfg.n_max)
        H = random_three_graph(n, rng.uniform(cfg.p_min, 1.0), rng)
        d2 = min_codegree(H)
        if 3 * d2 <= n:
            continue
        res = find_spanning_sphere(H, budget)
        done += 1
        yield {"n": n, "m": H.m, "min_codegree": d2, "verdict": res.verdict, "nodes": res.nodes, "edges": H.sorted_edges() if res.verdict == "none-certified" else None}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, value in asdict(ProbeConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(value), default=value)
    cfg = ProbeConfig(**vars(ap.parse_args()))
    tally: dict[str, int] = {}
    for row in probe(cfg):
        tally[row["verdict"]] = tally.get(row["verdict"], 0) + 1
        print(json.dumps(row))
    print(json.dumps({"config": asdict(cfg), "verdicts": tally}))


if __name__ == "__main__":
    main()
