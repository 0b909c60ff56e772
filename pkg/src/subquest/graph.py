"""Immutable undirected labeled graphs and their file loaders.

Vertex ids are dense 0-based integers internally.  Loaders remap the ids
found in input files and keep the original ids around so results can be
reported in the input's id space.
"""

from __future__ import annotations

import os


class GraphFormatError(ValueError):
    """A graph file violates the expected format."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Graph:
    """Undirected graph: ascending neighbor lists, no self loops, no parallel edges.

    ``vertex_labels`` is None for unlabeled graphs; ``label()`` then reports a
    single synthetic label (0) for every vertex.  Edge labels default to 0.
    Instances are immutable after construction and safe for concurrent reads.
    """

    __slots__ = ("adjacency", "vertex_labels", "_edge_labels", "original_ids",
                 "_edge_set")

    def __init__(self, vertex_count, edges, vertex_labels=None,
                 edge_labels=None, original_ids=None):
        adjacency = [[] for _ in range(vertex_count)]
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                continue
            seen.add(e)
            adjacency[e[0]].append(e[1])
            adjacency[e[1]].append(e[0])
        self.adjacency = tuple(tuple(sorted(ns)) for ns in adjacency)
        self._edge_set = frozenset(seen)
        if vertex_labels is not None:
            vertex_labels = tuple(vertex_labels)
            if len(vertex_labels) != vertex_count:
                raise ValueError("exactly one label per vertex required")
        self.vertex_labels = vertex_labels
        self._edge_labels = (
            {_norm(u, v): int(l) for (u, v), l in edge_labels.items()}
            if edge_labels else {}
        )
        if original_ids is None:
            original_ids = range(vertex_count)
        self.original_ids = tuple(original_ids)

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return len(self._edge_set)

    def vertices(self):
        return range(self.vertex_count)

    def edges(self):
        """All edges as normalized (u, v) pairs with u < v, sorted."""
        return sorted(self._edge_set)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self._edge_set

    def neighbors(self, v: int):
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex id {v} out of range")
        return len(self.adjacency[v])

    def label(self, v: int) -> int:
        if self.vertex_labels is None:
            return 0
        return self.vertex_labels[v]

    def edge_label(self, u: int, v: int) -> int:
        return self._edge_labels.get(_norm(u, v), 0)

    def original_id(self, v: int) -> int:
        return self.original_ids[v]

    def __eq__(self, other):
        """Structural equality; original ids are loader metadata and ignored."""
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.adjacency == other.adjacency
                and self.vertex_labels == other.vertex_labels
                and self._nonzero_edge_labels() == other._nonzero_edge_labels())

    __hash__ = None

    def __repr__(self):
        return f"Graph(|V|={self.vertex_count}, |E|={self.edge_count})"

    def _nonzero_edge_labels(self):
        return {e: l for e, l in self._edge_labels.items() if l != 0}

    def to_lg(self) -> str:
        """Render in LG format with internal ids (header, v-lines, e-lines)."""
        out = ["t # 0"]
        for v in self.vertices():
            out.append(f"v {v} {self.label(v)}")
        emit_elabels = bool(self._nonzero_edge_labels())
        for u, v in self.edges():
            if emit_elabels:
                out.append(f"e {u} {v} {self.edge_label(u, v)}")
            else:
                out.append(f"e {u} {v}")
        return "\n".join(out) + "\n"


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def load_edge_list(path: str | os.PathLike) -> Graph:
    """Load a plain edge list: two decimal ids per line, '#'/'%' comments.

    Duplicate edges are merged; self-loops are rejected with a line number.
    External ids may be arbitrary non-negative integers and are remapped to
    a dense 0-based range in ascending order.
    """
    edges = []
    referenced = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#") or line.startswith("%"):
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise GraphFormatError(
                    f"expected two integer tokens, got {tokens!r}", lineno)
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise GraphFormatError(
                    f"non-integer vertex id in {tokens!r}", lineno) from None
            if u == v:
                raise GraphFormatError(f"self-loop on vertex {u}", lineno)
            referenced.update((u, v))
            edges.append((u, v))
    originals = sorted(referenced)
    remap = {orig: i for i, orig in enumerate(originals)}
    return Graph(len(originals),
                 [(remap[u], remap[v]) for u, v in edges],
                 original_ids=originals)


def load_lg(path: str | os.PathLike) -> Graph:
    """Load an LG file: optional 't # <gid>' header, 'v <id> <label>' lines,
    'e <u> <v> [<elabel>]' lines.

    Vertex ids must form one consecutive run (gaps are an error); they are
    shifted to 0-based internally with the originals retained.
    """
    labels = {}
    raw_edges = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#") or line.startswith("%"):
                continue
            tokens = line.split()
            kind = tokens[0]
            if kind == "t":
                continue
            if kind == "v":
                if len(tokens) < 3:
                    raise GraphFormatError("vertex line missing label", lineno)
                try:
                    vid, lab = int(tokens[1]), int(tokens[2])
                except ValueError:
                    raise GraphFormatError(
                        f"non-integer token in {tokens!r}", lineno) from None
                if vid in labels:
                    raise GraphFormatError(f"duplicate vertex id {vid}", lineno)
                labels[vid] = lab
            elif kind == "e":
                if len(tokens) < 3:
                    raise GraphFormatError("edge line missing endpoint", lineno)
                try:
                    u, v = int(tokens[1]), int(tokens[2])
                    el = int(tokens[3]) if len(tokens) > 3 else 0
                except ValueError:
                    raise GraphFormatError(
                        f"non-integer token in {tokens!r}", lineno) from None
                if u == v:
                    raise GraphFormatError(f"self-loop on vertex {u}", lineno)
                raw_edges.append((u, v, el, lineno))
            else:
                raise GraphFormatError(f"unknown line kind {kind!r}", lineno)
    if not labels:
        return Graph(0, [])
    originals = sorted(labels)
    if originals[-1] - originals[0] != len(originals) - 1:
        raise GraphFormatError(
            f"vertex ids not consecutive: {originals[0]}..{originals[-1]} "
            f"with {len(originals)} vertices")
    base = originals[0]
    edges = []
    edge_labels = {}
    for u, v, el, lineno in raw_edges:
        if u not in labels or v not in labels:
            raise GraphFormatError(
                f"edge ({u}, {v}) references an undeclared vertex", lineno)
        e = _norm(u - base, v - base)
        edges.append(e)
        edge_labels.setdefault(e, el)
    return Graph(len(originals), edges,
                 vertex_labels=[labels[o] for o in originals],
                 edge_labels=edge_labels,
                 original_ids=originals)
