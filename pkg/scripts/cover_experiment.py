"""Largest closed-surface cover of the extremal families for small n, next to 2*ceil(n/3)."""

import argparse
import json
import math
from dataclasses import asdict, dataclass

from hypersurf.constructions import single_tight_counterexample, tripartite_extremal, two_component_extremal
from hypersurf.search import SearchBudget, max_surface_cover

FAMILIES = {
    "tripartite": tripartite_extremal,
    "two-component": two_component_extremal,
    "single-tight": single_tight_counterexample,
}


@dataclass(frozen=True)
class CoverConfig:
    n_min: int = 6
    n_max: int = 9
    max_nodes: int = 10**7
    time_cap: float = 600.0
    workers: int = 1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, value in asdict(CoverConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(value), default=value)
    cfg = CoverConfig(**vars(ap.parse_args()))
    budget = SearchBudget(cfg.max_nodes, cfg.time_cap)
    for fam, build in FAMILIES.items():
        for n in range(cfg.n_min, cfg.n_max + 1):
            try:
                H = build(n)
            except ValueError:
                continue
            res = max_surface_cover(H, budget, max_n=max(cfg.n_max, 9), workers=cfg.workers)
            row = {
                "family": fam,
                "n": n,
                "cover": res.extra["value"],
                "bound": 2 * math.ceil(n / 3),
                "exhaustive": res.exhaustive_flag,
                "seconds": round(res.elapsed, 3),
            }
            print(json.dumps(row), flush=True)


if __name__ == "__main__":
    main()
