#!/usr/bin/env python3
"""Measure how much work prioritization + pruning save on random graphs.

For each seed, runs top-1 clique discovery twice on the same G(n, p)
graph: once with both optimizations, once with neither (FIFO order, no
domination).  Reports the candidate-subgraph counts and the ratio.
"""

import argparse
import random
import statistics
import time
from dataclasses import dataclass

from subquest import CliqueComputation, FifoQueue, Graph, WithoutPruning, run_basic


@dataclass
class ExperimentConfig:
    n: int = 50
    p: float = 0.3
    seeds: int = 20
    k: int = 1


def gnp(n, p, rng):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < p])


def run(config: ExperimentConfig):
    print(f"G({config.n}, {config.p}), k={config.k}, {config.seeds} seeds")
    print(f"{'seed':>4} {'optimized':>10} {'baseline':>10} {'ratio':>7}")
    ratios = []
    start = time.perf_counter()
    for seed in range(config.seeds):
        rng = random.Random(seed)
        g = gnp(config.n, config.p, rng)
        comp = CliqueComputation(g)
        _, fast = run_basic(g, comp, config.k)
        _, slow = run_basic(g, WithoutPruning(comp), config.k, FifoQueue())
        ratio = fast.candidate_subgraphs / max(1, slow.candidate_subgraphs)
        ratios.append(ratio)
        print(f"{seed:>4} {fast.candidate_subgraphs:>10} "
              f"{slow.candidate_subgraphs:>10} {ratio:>7.3f}")
    elapsed = time.perf_counter() - start
    print(f"\nmean ratio {statistics.mean(ratios):.3f} "
          f"(lower is better), {elapsed:.1f}s total")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=50)
    parser.add_argument("--p", type=float, default=0.3)
    parser.add_argument("--seeds", type=int, default=20)
    parser.add_argument("--k", type=int, default=1)
    args = parser.parse_args()
    run(ExperimentConfig(n=args.n, p=args.p, seeds=args.seeds, k=args.k))
