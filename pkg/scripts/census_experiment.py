"""Connectibility census of random disjoint edge pairs in dense random 3-graphs."""

import argparse
import json
import random
from dataclasses import asdict, dataclass
from itertools import combinations

from hypersurf.constructions import random_three_graph
from hypersurf.hypergraph import min_codegree
from hypersurf.search import SearchBudget, connectibility_census


@dataclass(frozen=True)
class CensusConfig:
    hosts: int = 5
    n: int = 10
    p: float = 0.8
    pairs: int = 3
    l_max: int = 2
    seed: int = 7
    max_nodes: int = 10**6


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, value in asdict(CensusConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(value), default=value)
    cfg = CensusConfig(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    for h in range(cfg.hosts):
        H = random_three_graph(cfg.n, cfg.p, rng)
        disjoint = [(e, f) for e, f in combinations(H.sorted_edges(), 2) if not set(e) & set(f)]
        for e, f in rng.sample(disjoint, min(cfg.pairs, len(disjoint))):
            res = connectibility_census(H, e, f, cfg.l_max, SearchBudget(max_nodes=cfg.max_nodes))
            print(json.dumps({"host": h, "min_codegree": min_codegree(H), **res.to_json(H.n)}), flush=True)


if __name__ == "__main__":
    main()
