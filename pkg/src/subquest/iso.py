"""Top-k subgraph isomorphism with degree-sum scoring.

Partial matches grow edge by edge.  A subgraph is expandable by an edge
only when at least one of its partial query mappings extends consistently
(label-preserving, injective, every subgraph edge the image of a query
edge), so exploration never leaves the space of partial matches.  A match
is complete when some mapping covers every query vertex and the subgraph
realizes every query edge.

Pruning rests on a per-vertex index: for each source vertex, hop count d
and label l, the maximum degree over vertices with label l at shortest-path
distance exactly d from the source.  Any completion must place the image
of an unmatched query vertex within its query-graph distance of the seed,
so the best degree within that radius bounds the score it can contribute.
Summing those caps over unmatched vertices (and maximizing over mappings)
bounds the final score of every descendant; a subgraph whose bound falls
below the current k-th score can be discarded.
"""

from __future__ import annotations

import struct
from collections import deque
from concurrent.futures import ThreadPoolExecutor

from .engine import Computation, Subgraph, edge_oriented_expansions, expand_with_edge

_U32 = struct.Struct("<I")

NEG_INF = float("-inf")


class IndexFormatError(ValueError):
    """An index file violates the expected format."""


class IndexDepthError(ValueError):
    """A required hop count exceeds the index depth."""


class VertexIndex:
    """(source vertex, hop, label) -> max degree at exactly that distance."""

    __slots__ = ("hops", "table")

    def __init__(self, hops: int, table: dict):
        if hops < 1:
            raise ValueError("index depth must be >= 1")
        self.hops = hops
        self.table = table

    def lookup(self, v: int, d: int, label: int):
        return self.table.get((v, d, label))

    def max_within(self, v: int, d: int, label: int):
        """Best entry over hops 1..d (an image may sit nearer than its
        query-graph distance, so the bound must cover the whole radius)."""
        best = None
        for h in range(1, d + 1):
            got = self.table.get((v, h, label))
            if got is not None and (best is None or got > best):
                best = got
        return best

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"D {self.hops}\n")
            for (v, d, label), deg in sorted(self.table.items()):
                fh.write(f"{v} {d} {label} {deg}\n")


def _shell_rows(graph, source: int, hops: int) -> dict:
    rows = {}
    dist = {source: 0}
    frontier = deque([source])
    while frontier:
        u = frontier.popleft()
        if dist[u] == hops:
            continue
        for w in graph.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                frontier.append(w)
                key = (source, dist[w], graph.label(w))
                deg = graph.degree(w)
                if rows.get(key, -1) < deg:
                    rows[key] = deg
    return rows


def build_index(graph, hops: int, threads: int = 1) -> VertexIndex:
    """BFS shells from every vertex; deterministic regardless of threads."""
    if hops < 1:
        raise ValueError("hops must be >= 1")
    table = {}
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(lambda v: _shell_rows(graph, v, hops),
                             graph.vertices())
            for part in parts:
                table.update(part)
    else:
        for v in graph.vertices():
            table.update(_shell_rows(graph, v, hops))
    return VertexIndex(hops, table)


def load_index(path) -> VertexIndex:
    table = {}
    hops = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            tokens = line.split()
            if hops is None:
                if tokens[0] != "D" or len(tokens) != 2:
                    raise IndexFormatError(
                        f"line {lineno}: expected 'D <hops>' header")
                hops = int(tokens[1])
                continue
            if len(tokens) != 4:
                raise IndexFormatError(
                    f"line {lineno}: expected '<vertex> <hop> <label> <maxdeg>'")
            v, d, label, deg = (int(x) for x in tokens)
            table[(v, d, label)] = deg
    if hops is None:
        raise IndexFormatError("missing 'D <hops>' header")
    return VertexIndex(hops, table)


class MatchState:
    """Seed vertex, the surviving partial query mappings, and the score.

    ``mappings`` holds injective {query vertex: data vertex} dicts, each
    covering all of V_s.  ``upper`` is the bound on the score obtainable
    from unmatched query vertices (-inf when no mapping can complete).
    """

    __slots__ = ("seed", "mappings", "score", "upper")

    def __init__(self, seed, mappings, score, upper):
        self.seed = seed
        self.mappings = mappings
        self.score = score
        self.upper = upper


class IsomorphismComputation(Computation):
    """Top-k query matches ranked by (edge count, score + remaining bound)."""

    def __init__(self, graph, query, index: VertexIndex | None = None,
                 hops: int | None = None):
        self.graph = graph
        self.query = query
        if query.vertex_count == 0:
            raise ValueError("empty query graph")
        self._qdist = _all_pairs_distances(query)
        for row in self._qdist:
            if len(row) != query.vertex_count:
                raise ValueError("query graph must be connected")
        if index is None:
            if hops is None:
                hops = max(1, max(max(row.values()) for row in self._qdist))
            index = build_index(graph, hops)
        self.index = index

    # -- seeding and expansion

    def units(self, graph):
        units = []
        for v in graph.vertices():
            compatible = tuple(
                {q: v} for q in self.query.vertices()
                if self.query.label(q) == graph.label(v))
            if not compatible:
                continue
            score = graph.degree(v)
            state = MatchState(v, compatible, score,
                               self._remaining_bound(v, compatible))
            units.append(Subgraph((v,), frozenset(), state))
        return units

    def expansions(self, s: Subgraph):
        return edge_oriented_expansions(self.graph, s)

    def expandable(self, s: Subgraph, e) -> bool:
        return bool(self._extensions(s, e))

    def expand(self, s: Subgraph, e) -> Subgraph:
        mappings = self._extensions(s, e)
        u, v = e
        new_vertex = None
        if u not in s.vertices:
            new_vertex = u
        elif v not in s.vertices:
            new_vertex = v
        score = s.ext.score
        if new_vertex is not None:
            score += self.graph.degree(new_vertex)
        state = MatchState(s.ext.seed, mappings, score,
                           self._remaining_bound(s.ext.seed, mappings))
        return expand_with_edge(self.graph, s, e, state)

    def _extensions(self, s: Subgraph, e):
        """Mappings of the child subgraph s + e, deduplicated."""
        u, v = e
        if u in s.vertices and v in s.vertices:
            out = []
            for m in s.ext.mappings:
                inv = {dv: qv for qv, dv in m.items()}
                qu, qv = inv[u], inv[v]
                if (self.query.has_edge(qu, qv)
                        and self.query.edge_label(qu, qv)
                        == self.graph.edge_label(u, v)):
                    out.append(m)
            return tuple(out)
        if v in s.vertices:
            u, v = v, u  # u inside, v the new endpoint
        label_v = self.graph.label(v)
        elabel = self.graph.edge_label(u, v)
        out = {}
        for m in s.ext.mappings:
            inv = {dv: qv for qv, dv in m.items()}
            qu = inv[u]
            for qw in self.query.adjacency[qu]:
                if (qw in m or self.query.label(qw) != label_v
                        or self.query.edge_label(qu, qw) != elabel):
                    continue
                child = dict(m)
                child[qw] = v
                out.setdefault(frozenset(child.items()), child)
        return tuple(out.values())

    # -- ranking and pruning

    def relevant(self, s: Subgraph) -> bool:
        if len(s.edges) != self.query.edge_count:
            return False
        nq = self.query.vertex_count
        return any(len(m) == nq for m in s.ext.mappings)

    def priority(self, s: Subgraph):
        return (len(s.edges), s.ext.score + s.ext.upper)

    def dominated(self, s: Subgraph, other: Subgraph) -> bool:
        return s.ext.score + s.ext.upper < other.ext.score

    def remaining_bound(self, s: Subgraph) -> float:
        """Bound on the score still obtainable from unmatched query vertices."""
        return s.ext.upper

    def _remaining_bound(self, seed: int, mappings) -> float:
        best = NEG_INF
        for m in mappings:
            seed_q = next(qv for qv, dv in m.items() if dv == seed)
            dist_row = self._qdist[seed_q]
            total = 0.0
            for qv in self.query.vertices():
                if qv in m:
                    continue
                d = dist_row[qv]
                if d > self.index.hops:
                    raise IndexDepthError(
                        f"query needs hop {d} but index depth is "
                        f"{self.index.hops}")
                cap = self.index.max_within(seed, d, self.query.label(qv))
                if cap is None:
                    total = NEG_INF  # no completion can place this vertex
                    break
                total += cap
            if total > best:
                best = total
        return best

    # -- spill codec

    def item_codec(self):
        from .vpq import decode_subgraph, encode_subgraph

        def encode(s):
            return encode_subgraph(s, _encode_state)

        def decode(payload):
            return decode_subgraph(payload, self._decode_state)

        return encode, decode

    def _decode_state(self, raw: bytes, vertices, edges) -> MatchState:
        pos = 0
        (seed,) = _U32.unpack_from(raw, pos)
        pos += 4
        (nmaps,) = _U32.unpack_from(raw, pos)
        pos += 4
        mappings = []
        for _ in range(nmaps):
            (npairs,) = _U32.unpack_from(raw, pos)
            pos += 4
            m = {}
            for _ in range(npairs):
                (qv,) = _U32.unpack_from(raw, pos)
                (dv,) = _U32.unpack_from(raw, pos + 4)
                pos += 8
                m[qv] = dv
            mappings.append(m)
        mappings = tuple(mappings)
        score = sum(self.graph.degree(v) for v in vertices)
        return MatchState(seed, mappings, score,
                          self._remaining_bound(seed, mappings))


def _encode_state(state: MatchState) -> bytes:
    parts = [_U32.pack(state.seed), _U32.pack(len(state.mappings))]
    for m in state.mappings:
        parts.append(_U32.pack(len(m)))
        for qv in sorted(m):
            parts.append(_U32.pack(qv))
            parts.append(_U32.pack(m[qv]))
    return b"".join(parts)


def _all_pairs_distances(g) -> list[dict]:
    rows = []
    for source in g.vertices():
        dist = {source: 0}
        frontier = deque([source])
        while frontier:
            u = frontier.popleft()
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    frontier.append(w)
        rows.append(dist)
    return rows
