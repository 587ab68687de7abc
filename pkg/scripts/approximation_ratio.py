"""Compare the pseudoforest split with the exact planar split thickness.

Draws random graphs, computes the exact value with the branch-and-bound
solver where the budget allows, and reports the ratio p(G) / f(G). The
ratio stays at most 3 because a planar k-split has at most 3 times as
many edges as vertices, which bounds every subgraph density by 3k.

    python scripts/approximation_ratio.py --samples 200 --seed 1
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from splitthick.exact import SearchBudget, split_thickness_exact
from splitthick.graph import gen_random
from splitthick.splitters import pseudoarboricity


@dataclass
class ExperimentConfig:
    samples: int = 200
    n_min: int = 5
    n_max: int = 9
    seed: int = 0
    max_nodes: int = 200_000
    max_seconds: float = 5.0


def run(cfg: ExperimentConfig) -> Counter:
    rng = random.Random(cfg.seed)
    budget = SearchBudget(cfg.max_nodes, cfg.max_seconds)
    ratios: Counter = Counter()
    for _ in range(cfg.samples):
        g = gen_random(rng.randint(cfg.n_min, cfg.n_max), rng.uniform(0.3, 1.0), rng)
        if g.m == 0:
            continue
        f = split_thickness_exact(g, 4, budget)
        if f is None:
            ratios["unknown"] += 1
            continue
        ratios[Fraction(pseudoarboricity(g), f)] += 1
    return ratios


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(ExperimentConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    cfg = ExperimentConfig(**vars(ap.parse_args(argv)))
    ratios = run(cfg)
    known = {r: c for r, c in ratios.items() if r != "unknown"}
    for r in sorted(known):
        print(f"p/f = {str(r):>5}: {known[r]}")
    if "unknown" in ratios:
        print(f"budget exhausted: {ratios['unknown']}")
    worst = max(known, default=0)
    print(f"worst ratio {worst} ({'within' if worst <= 3 else 'ABOVE'} the factor 3)")
    return 0 if worst <= 3 else 1


if __name__ == "__main__":
    raise SystemExit(main())
