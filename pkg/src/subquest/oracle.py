"""Brute-force baselines for validating engine results at desk scale.

Everything here answers by exhaustive enumeration plus the raw definition
of each measure, sharing no code with the engine's expansion paths (only
the graph structures and, for map keys, the canonical pattern code).
Budgets make runaway inputs fail loudly instead of hanging.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .dfscode import graph_of_code, min_dfs_code
from .engine import Subgraph
from .graph import Graph


@dataclass(frozen=True)
class EnumerationBudget:
    max_vertices: int = 12
    max_edges: int = 20
    max_subgraphs: int = 10_000_000

    def __post_init__(self):
        if min(self.max_vertices, self.max_edges, self.max_subgraphs) < 1:
            raise ValueError("budget caps must be positive")


class BudgetExceededError(RuntimeError):
    pass


DEFAULT_BUDGET = EnumerationBudget()


def enumerate_connected_subgraphs(g: Graph, budget: EnumerationBudget | None = None,
                                  mode: str = "vertex"):
    """Every connected subgraph exactly once, in a canonical order.

    ``vertex`` mode yields vertex-induced subgraphs (all internal edges
    included).  ``edge`` mode yields single vertices plus every connected
    edge subset.
    """
    budget = budget or DEFAULT_BUDGET
    if g.vertex_count > budget.max_vertices:
        raise BudgetExceededError(
            f"graph has {g.vertex_count} vertices, budget allows "
            f"{budget.max_vertices}")
    if g.edge_count > budget.max_edges:
        raise BudgetExceededError(
            f"graph has {g.edge_count} edges, budget allows {budget.max_edges}")
    out = []

    def emit(s):
        out.append(s)
        if len(out) > budget.max_subgraphs:
            raise BudgetExceededError(
                f"more than {budget.max_subgraphs} subgraphs")

    if mode == "vertex":
        vertices = list(g.vertices())
        for size in range(1, g.vertex_count + 1):
            for combo in itertools.combinations(vertices, size):
                members = set(combo)
                edges = frozenset(
                    (u, v) for u, v in itertools.combinations(combo, 2)
                    if g.has_edge(u, v))
                if _vertices_connected(g, members):
                    emit(Subgraph(combo, edges))
    elif mode == "edge":
        for v in g.vertices():
            emit(Subgraph((v,), frozenset()))
        all_edges = g.edges()
        for size in range(1, len(all_edges) + 1):
            for combo in itertools.combinations(all_edges, size):
                if _edges_connected(combo):
                    vs = tuple(sorted({x for e in combo for x in e}))
                    emit(Subgraph(vs, frozenset(combo)))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return out


def brute_max_clique(g: Graph, budget: EnumerationBudget | None = None):
    """(size, witness) of a maximum clique, by exhaustive growth."""
    budget = budget or DEFAULT_BUDGET
    if g.vertex_count > budget.max_vertices:
        raise BudgetExceededError(
            f"graph has {g.vertex_count} vertices, budget allows "
            f"{budget.max_vertices}")
    if g.vertex_count == 0:
        return 0, ()
    best = [1, (0,)]

    def grow(clique, cands):
        if len(clique) > best[0]:
            best[0], best[1] = len(clique), clique
        for v in cands:
            grow(clique + (v,),
                 tuple(w for w in cands if w > v and g.has_edge(w, v)))

    for v in g.vertices():
        grow((v,), tuple(w for w in g.adjacency[v] if w > v))
    return best[0], best[1]


def brute_pattern_freqs(g: Graph, edge_count: int,
                        budget: EnumerationBudget | None = None) -> dict:
    """Canonical code -> minimum image-based support, for every connected
    pattern with exactly ``edge_count`` edges occurring in g."""
    budget = budget or DEFAULT_BUDGET
    if g.edge_count > budget.max_edges:
        raise BudgetExceededError(
            f"graph has {g.edge_count} edges, budget allows {budget.max_edges}")
    if g.vertex_labels is None:
        raise ValueError("pattern frequencies need a vertex-labeled graph")
    patterns = set()
    for combo in itertools.combinations(g.edges(), edge_count):
        if not _edges_connected(combo):
            continue
        vs = sorted({x for e in combo for x in e})
        remap = {v: i for i, v in enumerate(vs)}
        sub = Graph(len(vs), [(remap[u], remap[v]) for u, v in combo],
                    vertex_labels=[g.label(v) for v in vs],
                    edge_labels={(remap[u], remap[v]): g.edge_label(u, v)
                                 for u, v in combo})
        patterns.add(min_dfs_code(sub))
    freqs = {}
    for code in sorted(patterns):
        pattern = graph_of_code(code)
        images = [set() for _ in pattern.vertices()]
        for emb in _embeddings(pattern, g):
            for pv, dv in enumerate(emb):
                images[pv].add(dv)
        freqs[code] = min(len(img) for img in images)
    return freqs


def brute_topk_iso(g: Graph, query: Graph, k: int) -> list:
    """Descending score multiset of the top-k query matches (ties at the
    k-th score retained), scores being degree sums over match vertices."""
    if k < 1:
        raise ValueError("k must be >= 1")
    matches = {}
    for emb in _embeddings(query, g):
        vertices = frozenset(emb)
        edges = frozenset(
            (emb[a], emb[b]) if emb[a] < emb[b] else (emb[b], emb[a])
            for a, b in query.edges())
        matches[(vertices, edges)] = sum(g.degree(v) for v in vertices)
    scores = sorted(matches.values(), reverse=True)
    if len(scores) > k:
        bound = scores[k - 1]
        scores = [s for s in scores if s >= bound]
    return scores


def _embeddings(pattern: Graph, g: Graph):
    """All injective label- and edge-preserving maps pattern -> g.

    Pattern vertices are assigned in an order where each one (after the
    first) neighbors an earlier one, so partial assignments stay connected.
    """
    order = _connected_order(pattern)
    np_ = pattern.vertex_count
    assigned = [None] * np_
    used = set()
    out = []

    def place(idx):
        if idx == np_:
            out.append(tuple(assigned))
            return
        pv = order[idx]
        anchors = [qv for qv in pattern.adjacency[pv] if assigned[qv] is not None]
        if anchors:
            candidates = g.adjacency[assigned[anchors[0]]]
        else:
            candidates = g.vertices()
        for dv in candidates:
            if dv in used or g.label(dv) != pattern.label(pv):
                continue
            ok = True
            for qv in anchors:
                if (not g.has_edge(dv, assigned[qv])
                        or g.edge_label(dv, assigned[qv])
                        != pattern.edge_label(pv, qv)):
                    ok = False
                    break
            if ok:
                assigned[pv] = dv
                used.add(dv)
                place(idx + 1)
                used.discard(dv)
                assigned[pv] = None

    place(0)
    return out


def _connected_order(g: Graph) -> list[int]:
    order = [0]
    seen = {0}
    i = 0
    while i < len(order):
        for w in g.adjacency[order[i]]:
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1
    if len(order) != g.vertex_count:
        raise ValueError("pattern graph must be connected")
    return order


def _vertices_connected(g: Graph, members: set) -> bool:
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        for w in g.adjacency[stack.pop()]:
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


def _edges_connected(edges) -> bool:
    adj = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = edges[0][0]
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)
