"""Command-line front end.

Subcommands: ``clique``, ``mine``, ``iso`` run discovery computations and
write JSON Lines result records; ``index`` precomputes the isomorphism
index; ``oracle`` exposes the brute-force baselines for reproduction
scripts.  Results go to --output (default stdout), a one-line stats
summary goes to stderr, and exit codes are 0 (ok), 1 (usage error),
2 (runtime error).

Output files are byte-deterministic for identical inputs and flags; wall
time is reported only on stderr for that reason.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .clique import CliqueComputation
from .engine import WithoutPruning, run_aggregate, run_basic
from .graph import GraphFormatError, load_edge_list, load_lg
from .iso import (IndexDepthError, IndexFormatError, IsomorphismComputation,
                  build_index, load_index)
from .mining import PatternMiningComputation, describe_group
from .oracle import (BudgetExceededError, EnumerationBudget, brute_max_clique,
                     brute_pattern_freqs, brute_topk_iso,
                     enumerate_connected_subgraphs)
from .queues import FifoQueue
from .vpq import QueueError, VirtualPriorityQueue, VpqConfig

SPILL_DIR_ENV = "SUBQUEST_SPILL_DIR"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_common(p):
    p.add_argument("--graph", required=True, help="data graph file")
    p.add_argument("--format", choices=("edgelist", "lg"), default=None,
                   help="graph format (default: by file extension)")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--no-prune", action="store_true",
                   help="disable domination pruning")
    p.add_argument("--no-priority", action="store_true",
                   help="use a FIFO queue instead of the priority queue")
    p.add_argument("--max-mem-entries", type=int, default=1_000_000,
                   help="queue entries kept in memory before spilling")
    p.add_argument("--spill-dir", default=None,
                   help=f"run-file directory (default: ${SPILL_DIR_ENV} "
                        "or a temp dir)")
    p.add_argument("--output", default=None, help="result path (default stdout)")
    p.add_argument("--stats-json", default=None,
                   help="write run counters as JSON to this path")


def _build_parser() -> _Parser:
    parser = _Parser(prog="subquest",
                     description="top-k subgraph discovery engine")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("clique", help="top-k maximum cliques")
    _add_common(p)
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser("mine", help="top-k frequent patterns")
    _add_common(p)
    p.add_argument("--edges", type=int, required=True, metavar="M",
                   help="pattern size in edges")
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("iso", help="top-k subgraph isomorphism matches")
    _add_common(p)
    p.add_argument("--query", required=True, help="query graph (lg format)")
    p.add_argument("--index", default=None, help="precomputed index file")
    p.add_argument("--hops", type=int, default=None,
                   help="index depth when building in-process "
                        "(default: query diameter)")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("index", help="build the isomorphism vertex index")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=("edgelist", "lg"), default=None)
    p.add_argument("--hops", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("oracle", help="brute-force baselines")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=("edgelist", "lg"), default=None)
    p.add_argument("--task", required=True,
                   choices=("max-clique", "pattern-freqs", "topk-iso",
                            "count-subgraphs"))
    p.add_argument("--edges", type=int, default=None)
    p.add_argument("--query", default=None)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--mode", choices=("vertex", "edge"), default="vertex")
    p.add_argument("--max-vertices", type=int, default=12)
    p.add_argument("--max-edges", type=int, default=20)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (GraphFormatError, IndexFormatError, IndexDepthError, QueueError,
            BudgetExceededError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


# --------------------------------------------------------------------------
# helpers

def _load_graph(path, fmt):
    if fmt is None:
        fmt = "lg" if str(path).endswith(".lg") else "edgelist"
    return load_lg(path) if fmt == "lg" else load_edge_list(path)


def resolve_spill_dir(flag_value):
    """--spill-dir wins over the environment variable; None means temp."""
    if flag_value is not None:
        return flag_value
    return os.environ.get(SPILL_DIR_ENV)


def _make_queue(args, codec):
    if args.no_priority:
        return FifoQueue()
    config = VpqConfig(max_mem_entries=args.max_mem_entries,
                       spill_dir=resolve_spill_dir(args.spill_dir))
    encode, decode = codec
    return VirtualPriorityQueue(config, encode, decode)


def _plain_number(value):
    f = float(value)
    return int(f) if f.is_integer() else f


def _subgraph_record(rank, priority, s, g) -> dict:
    orig = g.original_ids
    edges = sorted(sorted((orig[u], orig[v])) for u, v in s.edges)
    return {
        "rank": rank,
        "priority": [_plain_number(v) for v in priority],
        "vertices": [orig[v] for v in s.vertices],
        "edges": [list(e) for e in edges],
    }


def _emit(records, output_path) -> None:
    text = "".join(json.dumps(r) + "\n" for r in records)
    if output_path is None:
        sys.stdout.write(text)
    else:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report(args, stats, results, wall_seconds) -> None:
    print(f"candidates={stats.candidate_subgraphs} "
          f"pruned_parent={stats.pruned_at_parent} "
          f"pruned_child={stats.pruned_at_child} "
          f"dequeues={stats.dequeues} results={len(results)} "
          f"wall_ms={wall_seconds * 1000.0:.1f}", file=sys.stderr)
    if args.stats_json:
        payload = {
            "command": args.command,
            "k": args.k,
            "pruning": not args.no_prune,
            "prioritized": not args.no_priority,
            "candidate_subgraphs": stats.candidate_subgraphs,
            "pruned_at_parent": stats.pruned_at_parent,
            "pruned_at_child": stats.pruned_at_child,
            "dequeues": stats.dequeues,
            "result_entries": len(results),
        }
        with open(args.stats_json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True)
            fh.write("\n")


def _run(args, graph, computation, aggregate=False):
    if args.k < 1:
        raise ValueError("--k must be >= 1")
    codec = computation.item_codec()
    if args.no_prune:
        computation = WithoutPruning(computation)
    queue = _make_queue(args, codec)
    start = time.perf_counter()
    try:
        runner = run_aggregate if aggregate else run_basic
        results, stats = runner(graph, computation, args.k, queue)
    finally:
        if hasattr(queue, "close"):
            queue.close()
    wall = time.perf_counter() - start
    return results, stats, wall


# --------------------------------------------------------------------------
# commands

def cmd_clique(args) -> int:
    graph = _load_graph(args.graph, args.format)
    results, stats, wall = _run(args, graph, CliqueComputation(graph))
    records = [_subgraph_record(rank, prio, s, graph)
               for rank, (s, prio) in enumerate(results, start=1)]
    _emit(records, args.output)
    _report(args, stats, results, wall)
    return 0


def cmd_mine(args) -> int:
    graph = _load_graph(args.graph, args.format)
    if graph.vertex_labels is None:
        raise ValueError(
            "pattern mining requires a labeled graph (lg format)")
    computation = PatternMiningComputation(graph, args.edges)
    results, stats, wall = _run(args, graph, computation, aggregate=True)
    records = []
    for rank, (group, prio) in enumerate(results, start=1):
        record = {"rank": rank, "priority": [_plain_number(v) for v in prio]}
        record.update(describe_group(group))
        records.append(record)
    _emit(records, args.output)
    _report(args, stats, results, wall)
    return 0


def cmd_iso(args) -> int:
    graph = _load_graph(args.graph, args.format)
    query = load_lg(args.query)
    index = load_index(args.index) if args.index else None
    computation = IsomorphismComputation(graph, query, index=index,
                                         hops=args.hops)
    results, stats, wall = _run(args, graph, computation)
    records = []
    for rank, (s, prio) in enumerate(results, start=1):
        record = _subgraph_record(rank, prio, s, graph)
        record["score"] = int(s.ext.score)
        records.append(record)
    _emit(records, args.output)
    _report(args, stats, results, wall)
    return 0


def cmd_index(args) -> int:
    graph = _load_graph(args.graph, args.format)
    start = time.perf_counter()
    index = build_index(graph, args.hops, threads=args.threads)
    index.save(args.out)
    wall = time.perf_counter() - start
    print(f"entries={len(index.table)} hops={index.hops} "
          f"wall_ms={wall * 1000.0:.1f}", file=sys.stderr)
    return 0


def cmd_oracle(args) -> int:
    graph = _load_graph(args.graph, args.format)
    budget = EnumerationBudget(max_vertices=args.max_vertices,
                               max_edges=args.max_edges)
    if args.task == "max-clique":
        size, witness = brute_max_clique(graph, budget)
        records = [{"size": size,
                    "vertices": sorted(graph.original_ids[v] for v in witness)}]
    elif args.task == "pattern-freqs":
        if args.edges is None:
            raise ValueError("--edges is required for pattern-freqs")
        freqs = brute_pattern_freqs(graph, args.edges, budget)
        from .dfscode import render_code
        records = [{"pattern": render_code(code), "frequency": f}
                   for code, f in sorted(freqs.items())]
    elif args.task == "topk-iso":
        if args.query is None:
            raise ValueError("--query is required for topk-iso")
        scores = brute_topk_iso(graph, load_lg(args.query), args.k)
        records = [{"rank": i, "score": s}
                   for i, s in enumerate(scores, start=1)]
    else:  # count-subgraphs
        subs = enumerate_connected_subgraphs(graph, budget, mode=args.mode)
        records = [{"mode": args.mode, "count": len(subs)}]
    _emit(records, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
