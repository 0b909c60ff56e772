"""Top-k frequent pattern mining over a single labeled graph.

Subgraphs are built by appending one directed edge at a time along the
rightmost path of their pattern's DFS code, and a child is kept only when
the extended code is canonical (minimal).  Each embedding of each pattern
is therefore constructed exactly once, every subgraph matching a pattern
descends from subgraphs matching the code's prefix pattern, and a child
pattern is obtained from its parent by appending a single tuple instead of
re-canonicalizing from scratch.

Groups collect all embeddings of one pattern; their frequency is the
minimum image-based support (distinct data vertices per pattern vertex,
minimized over pattern vertices), which is anti-monotone under extension
and hence a sound pruning signal: once the k-th result is more frequent
than a group, no super-pattern of that group can matter.
"""

from __future__ import annotations

import struct

from .dfscode import is_minimal, render_code, rightmost_path, tuple_sort_key
from .engine import AggregateComputation, Subgraph, SubgraphGroup

_U32 = struct.Struct("<I")


class PatternState:
    """Construction code of a mined subgraph.

    The embedding needs no separate storage: the subgraph's vertex sequence
    is aligned with the code's vertex ids (position t holds the data vertex
    that pattern vertex t maps to).
    """

    __slots__ = ("code",)

    def __init__(self, code):
        self.code = code


class PatternGroup(SubgraphGroup):
    """All embeddings of one pattern plus per-pattern-vertex image sets."""

    __slots__ = ("images",)

    def __init__(self, key):
        super().__init__(key)
        self.images = [set() for _ in range(_pattern_vertex_count(key))]

    def add(self, s: Subgraph):
        super().add(s)
        for cid, dv in enumerate(s.vertices):
            self.images[cid].add(dv)

    def frequency(self) -> int:
        return min(len(img) for img in self.images)

    def edge_count(self) -> int:
        return len(self.key)


def _pattern_vertex_count(code) -> int:
    return 1 + sum(1 for t in code if t[0] < t[1])


def mni_support(group: PatternGroup) -> int:
    """Minimum image-based support of the group's pattern."""
    return group.frequency()


def unit_subgraphs(graph):
    """One-edge seed subgraphs, one per canonical edge orientation.

    An edge with distinct endpoint labels seeds a single subgraph oriented
    from the smaller label; symmetric labels seed both orientations (they
    are distinct embeddings of the same one-edge pattern).
    """
    units = []
    for u, v in graph.edges():
        lu, lv = graph.label(u), graph.label(v)
        le = graph.edge_label(u, v)
        e = frozenset({(u, v)})
        if lu < lv:
            units.append(Subgraph((u, v), e, PatternState(((0, 1, lu, le, lv),))))
        elif lv < lu:
            units.append(Subgraph((v, u), e, PatternState(((0, 1, lv, le, lu),))))
        else:
            units.append(Subgraph((u, v), e, PatternState(((0, 1, lu, le, lv),))))
            units.append(Subgraph((v, u), e, PatternState(((0, 1, lu, le, lv),))))
    return units


def pattern_expansions(graph, s: Subgraph):
    """Data edges realizing a canonical rightmost-path extension of s.

    Returns (code_tuple, data_u, data_v) deltas: backward closures from the
    rightmost vertex to rightmost-path vertices, and forward growth from any
    rightmost-path vertex to a data vertex not yet in the embedding.  Only
    extensions whose child code stays minimal survive.
    """
    code = s.ext.code
    emb = s.vertices  # code vertex id -> data vertex
    rmp = rightmost_path(code)
    rightmost = rmp[-1]
    v_right = emb[rightmost]
    mapped = set(emb)
    out = []
    for q in rmp[:-1]:
        w = emb[q]
        if not graph.has_edge(v_right, w):
            continue
        e = (v_right, w) if v_right < w else (w, v_right)
        if e in s.edges:
            continue
        t = (rightmost, q, graph.label(v_right), graph.edge_label(*e),
             graph.label(w))
        if is_minimal(code + (t,)):
            out.append((t, v_right, w))
    next_id = len(emb)
    for q in rmp:
        u = emb[q]
        for w in graph.adjacency[u]:
            if w in mapped:
                continue
            t = (q, next_id, graph.label(u), graph.edge_label(u, w),
                 graph.label(w))
            if is_minimal(code + (t,)):
                out.append((t, u, w))
    out.sort(key=lambda d: (tuple_sort_key(d[0]), d[1], d[2]))
    return out


class PatternMiningComputation(AggregateComputation):
    """Find the k most frequent patterns with exactly ``max_edges`` edges."""

    def __init__(self, graph, max_edges: int):
        if max_edges < 1:
            raise ValueError("max_edges must be >= 1")
        if graph.vertex_labels is None:
            raise ValueError("pattern mining requires a vertex-labeled graph")
        self.graph = graph
        self.max_edges = max_edges

    def units(self, graph):
        return unit_subgraphs(graph)

    def key(self, s: Subgraph):
        return s.ext.code

    def make_group(self, key) -> PatternGroup:
        return PatternGroup(key)

    def expansions(self, s: Subgraph):
        return pattern_expansions(self.graph, s)

    def expandable(self, s: Subgraph, delta) -> bool:
        return len(s.edges) < self.max_edges

    def expand(self, s: Subgraph, delta) -> Subgraph:
        t, du, dv = delta
        e = (du, dv) if du < dv else (dv, du)
        vertices = s.vertices if dv in s.vertices else s.vertices + (dv,)
        return Subgraph(vertices, s.edges | {e}, PatternState(s.ext.code + (t,)))

    def relevant(self, group: PatternGroup) -> bool:
        return group.edge_count() == self.max_edges

    def priority(self, group: PatternGroup):
        return (group.edge_count(), group.frequency())

    def dominated(self, group: PatternGroup, other: PatternGroup) -> bool:
        return group.frequency() < other.frequency()

    # -- spill codec

    def item_codec(self):
        return _encode_group, _decode_group


def pattern_edges(code):
    """Edges of the pattern graph a code denotes, normalized and sorted."""
    return sorted((min(t[0], t[1]), max(t[0], t[1])) for t in code)


def describe_group(group: PatternGroup) -> dict:
    """JSON-ready record of a pattern group (pattern-space ids)."""
    return {
        "vertices": list(range(_pattern_vertex_count(group.key))),
        "edges": [list(e) for e in pattern_edges(group.key)],
        "pattern": render_code(group.key),
        "frequency": group.frequency(),
    }


def _encode_group(group: PatternGroup) -> bytes:
    parts = [_U32.pack(len(group.key))]
    for t in group.key:
        parts.extend(_U32.pack(x) for x in t)
    parts.append(_U32.pack(len(group.members)))
    for s in group.members:
        parts.append(_U32.pack(len(s.vertices)))
        parts.extend(_U32.pack(v) for v in s.vertices)
    return b"".join(parts)


def _decode_group(payload: bytes) -> PatternGroup:
    pos = 0
    (ntuples,) = _U32.unpack_from(payload, pos)
    pos += 4
    code = []
    for _ in range(ntuples):
        code.append(tuple(_U32.unpack_from(payload, pos + 4 * i)[0]
                          for i in range(5)))
        pos += 20
    code = tuple(code)
    group = PatternGroup(code)
    (nmembers,) = _U32.unpack_from(payload, pos)
    pos += 4
    shape = [(min(t[0], t[1]), max(t[0], t[1])) for t in code]
    for _ in range(nmembers):
        (n,) = _U32.unpack_from(payload, pos)
        pos += 4
        vertices = tuple(_U32.unpack_from(payload, pos + 4 * i)[0]
                         for i in range(n))
        pos += 4 * n
        edges = frozenset(
            (vertices[a], vertices[b]) if vertices[a] < vertices[b]
            else (vertices[b], vertices[a])
            for a, b in shape)
        group.add(Subgraph(vertices, edges, PatternState(code)))
    return group
