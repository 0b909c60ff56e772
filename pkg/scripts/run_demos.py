#!/usr/bin/env python3
"""Walk the three built-in computations over tiny demonstration graphs.

Prints, for each computation, what was found and how much of the search
space the optimizations skipped.  Useful as a quick end-to-end sanity
check and as executable documentation of the API.
"""

from subquest import (CliqueComputation, Graph, IsomorphismComputation,
                      PatternMiningComputation, WithoutPruning, render_code,
                      run_aggregate, run_basic)


def banner(title):
    print(f"\n=== {title} ===")


def clique_demo():
    banner("maximum clique (triangle with a tail)")
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    comp = CliqueComputation(g)
    results, stats = run_basic(g, comp, 1)
    _, baseline = run_basic(g, WithoutPruning(comp), 1)
    for s, prio in results:
        print(f"clique {list(s.vertices)}  priority {prio}")
    print(f"candidates: {stats.candidate_subgraphs} with pruning, "
          f"{baseline.candidate_subgraphs} without")


def mining_demo():
    banner("most frequent 2-edge pattern (two-label graph)")
    g = Graph(5, [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)],
              vertex_labels=[0, 1, 1, 1, 0])
    comp = PatternMiningComputation(g, 2)
    results, stats = run_aggregate(g, comp, 1)
    for grp, prio in results:
        print(f"pattern {render_code(grp.key)}  frequency {grp.frequency()} "
              f"({len(grp.members)} embeddings)")
    print(f"candidates: {stats.candidate_subgraphs}, "
          f"groups pruned: {stats.pruned_at_parent}")


def iso_demo():
    banner("top-1 subgraph isomorphism (path, one-edge query)")
    g = Graph(4, [(0, 1), (1, 2), (2, 3)], vertex_labels=[0, 0, 0, 0])
    q = Graph(2, [(0, 1)], vertex_labels=[0, 0])
    comp = IsomorphismComputation(g, q)
    for s in comp.units(g):
        print(f"seed {s.vertices[0]}: score {s.ext.score}, "
              f"bound {s.ext.score + s.ext.upper:g}")
    results, stats = run_basic(g, comp, 1)
    for s, prio in results:
        print(f"best match {list(s.vertices)}  score {int(s.ext.score)}")
    print(f"candidates: {stats.candidate_subgraphs}, "
          f"pruned at dequeue: {stats.pruned_at_parent}")


if __name__ == "__main__":
    clique_demo()
    mining_demo()
    iso_demo()
