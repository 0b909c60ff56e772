"""Top-k subgraph discovery on a single machine.

Exploration seeds unit subgraphs and grows them best-first: targeted
expansion keeps irrelevant subgraphs from ever being built, prioritization
fills the result set early, and domination pruning then discards anything
that provably cannot beat the k-th result.  Ships clique discovery,
frequent pattern mining, and subgraph isomorphism as built-in
computations, plus a disk-spilling priority queue for fronts larger than
main memory.
"""

from .clique import CliqueComputation, CliqueState, clique_candidates
from .dfscode import (code_of_child, graph_of_code, is_minimal, min_dfs_code,
                      render_code, rightmost_path)
from .engine import (AggregateComputation, Computation, ExplorationStats,
                     ResultSet, Subgraph, SubgraphGroup, WithoutPruning,
                     compare_priorities, edge_oriented_expansions, run_aggregate,
                     run_basic, vertex_oriented_expansions)
from .graph import Graph, GraphFormatError, load_edge_list, load_lg
from .iso import (IndexDepthError, IsomorphismComputation, MatchState,
                  VertexIndex, build_index, load_index)
from .mining import (PatternGroup, PatternMiningComputation, PatternState,
                     mni_support, pattern_expansions, unit_subgraphs)
from .oracle import (BudgetExceededError, EnumerationBudget, brute_max_clique,
                     brute_pattern_freqs, brute_topk_iso,
                     enumerate_connected_subgraphs)
from .queues import FifoQueue, MemoryPriorityQueue
from .vpq import (CorruptRecordError, QueueError, SpilledRun,
                  VirtualPriorityQueue, VpqConfig, decode_subgraph,
                  encode_subgraph)

__version__ = "0.1.0"

__all__ = [
    "AggregateComputation", "BudgetExceededError", "CliqueComputation",
    "CliqueState", "Computation", "CorruptRecordError", "EnumerationBudget",
    "ExplorationStats", "FifoQueue", "Graph", "GraphFormatError",
    "IndexDepthError", "IsomorphismComputation", "MatchState",
    "MemoryPriorityQueue", "PatternGroup", "PatternMiningComputation",
    "PatternState", "QueueError", "ResultSet", "SpilledRun", "Subgraph",
    "SubgraphGroup", "VertexIndex", "VirtualPriorityQueue", "VpqConfig",
    "WithoutPruning", "brute_max_clique", "brute_pattern_freqs",
    "brute_topk_iso", "build_index", "clique_candidates", "code_of_child",
    "compare_priorities", "decode_subgraph", "edge_oriented_expansions",
    "encode_subgraph", "enumerate_connected_subgraphs", "graph_of_code",
    "is_minimal", "load_edge_list", "load_index", "load_lg", "min_dfs_code",
    "mni_support", "pattern_expansions", "render_code", "rightmost_path",
    "run_aggregate", "run_basic", "unit_subgraphs",
    "vertex_oriented_expansions",
]
