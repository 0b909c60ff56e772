"""Canonical DFS codes for small patterns.

A pattern is encoded as a sequence of edge tuples ``(i, j, li, le, lj)``
where i and j are construction-order vertex ids, li/lj vertex labels and
le the edge label.  Forward tuples (i < j) introduce vertex j; backward
tuples (i > j) connect the rightmost vertex back to a vertex on the
rightmost path.  The *minimal* code over all DFS constructions is the
pattern's canonical form: one pattern, one code, regardless of how its
vertices are numbered in the data graph.

Tuple order (first difference decides, given equal prefixes): backward
before forward; backward vs backward by smaller j, then labels; forward
vs forward by larger i (deeper rightmost attachment wins), then labels.
This realizes two facts the canonical form must reproduce: a one-edge
code lists the smaller endpoint label first, and extending from deeper
on the rightmost path precedes extending from nearer the root.  Under
this order the length n-1 prefix of a minimal code is itself minimal,
which is what lets grouped mining expand one pattern into exactly its
super-patterns (verified exhaustively in the test suite).
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph

CodeTuple = tuple  # (i, j, li, le, lj)
Code = tuple       # tuple of CodeTuple


def is_forward(t: CodeTuple) -> bool:
    return t[0] < t[1]


def tuple_sort_key(t: CodeTuple):
    i, j, li, le, lj = t
    if i > j:  # backward
        return (0, j, li, le, lj)
    return (1, -i, li, le, lj)


def code_sort_key(code: Code):
    return tuple(tuple_sort_key(t) for t in code)


def render_code(code: Code) -> str:
    """Semicolon-joined '(i,j,li,le,lj)' tuples with decimal fields."""
    return ";".join("({},{},{},{},{})".format(*t) for t in code)


def rightmost_path(code: Code) -> list[int]:
    """Vertex ids on the rightmost path, root first.

    The rightmost path runs from the root to the most recently introduced
    vertex; it is the only legal attachment locus for extensions.
    """
    if not code:
        return [0]
    path = []
    target = None
    for t in reversed(code):
        i, j = t[0], t[1]
        if i < j and (target is None or j == target):
            path.append(j)
            target = i
    path.append(0)
    path.reverse()
    return path


def graph_of_code(code: Code) -> Graph:
    """Materialize the pattern a code denotes as a small labeled Graph."""
    if not code:
        raise ValueError("empty code has no vertex labels")
    labels = {}
    edges = {}
    for i, j, li, le, lj in code:
        labels.setdefault(i, li)
        labels.setdefault(j, lj)
        if labels[i] != li or labels[j] != lj:
            raise ValueError("inconsistent vertex labels in code")
        u, v = (i, j) if i < j else (j, i)
        if (u, v) in edges:
            raise ValueError(f"duplicate edge ({u}, {v}) in code")
        edges[(u, v)] = le
    n = max(labels) + 1
    if sorted(labels) != list(range(n)):
        raise ValueError("code vertex ids not consecutive from 0")
    return Graph(n, list(edges),
                 vertex_labels=[labels[v] for v in range(n)],
                 edge_labels=edges)


def code_of_child(code: Code, t: CodeTuple) -> Code:
    """Append one edge tuple, checking it is a rightmost-path extension."""
    i, j, li, le, lj = t
    if not code:
        if (i, j) != (0, 1):
            raise ValueError(f"first tuple must be (0, 1, ...), got {t!r}")
        return (t,)
    rmp = rightmost_path(code)
    max_id = max(max(c[0], c[1]) for c in code)
    present = {(min(c[0], c[1]), max(c[0], c[1])) for c in code}
    if i < j:  # forward
        if i not in rmp or j != max_id + 1:
            raise ValueError(
                f"forward tuple {t!r} does not extend the rightmost path")
    else:  # backward
        if i != rmp[-1] or j not in rmp or (j, i) in present:
            raise ValueError(
                f"backward tuple {t!r} is not a valid rightmost-path closure")
    return code + (t,)


def min_dfs_code(pattern: Graph) -> Code:
    """Canonical (minimum) DFS code of a connected pattern graph.

    Enumerates DFS constructions exhaustively, which is fine for the small
    patterns mined here.  Backward edges from the rightmost vertex are
    forced (all of them, in ascending target order) before any forward
    step, since a vertex never returns to the rightmost position; branches
    that strand an edge between already-visited vertices are abandoned.
    """
    n = pattern.vertex_count
    m = pattern.edge_count
    if n == 0:
        raise ValueError("empty pattern")
    if not _connected(pattern):
        raise ValueError("pattern is not connected")
    if m == 0:
        return ()

    best: list[Code | None] = [None]
    best_key = [None]

    def consider(code):
        key = code_sort_key(code)
        if best_key[0] is None or key < best_key[0]:
            best[0] = tuple(code)
            best_key[0] = key

    def worse_than_best(code):
        if best_key[0] is None:
            return False
        for t, bk in zip(code, best_key[0]):
            k = tuple_sort_key(t)
            if k < bk:
                return False
            if k > bk:
                return True
        return False

    def grow(code, cmap, order, rmp, used):
        if worse_than_best(code):
            return
        if len(code) == m:
            consider(code)
            return
        rightmost = rmp[-1]
        # Forced backward step: smallest-id unmatched closure first.
        back = None
        blocked = False
        for w in pattern.adjacency[rightmost]:
            if w not in cmap:
                continue
            e = (rightmost, w) if rightmost < w else (w, rightmost)
            if e in used:
                continue
            if w in rmp[:-1]:
                if back is None or cmap[w] < cmap[back]:
                    back = w
            else:
                blocked = True
        if back is not None:
            e = (rightmost, back) if rightmost < back else (back, rightmost)
            t = (cmap[rightmost], cmap[back], pattern.label(rightmost),
                 pattern.edge_label(*e), pattern.label(back))
            grow(code + [t], cmap, order, rmp, used | {e})
            return
        if blocked:
            return  # an edge to an off-path vertex can never be emitted
        for pos in range(len(rmp) - 1, -1, -1):
            u = rmp[pos]
            for w in pattern.adjacency[u]:
                if w in cmap:
                    continue
                e = (u, w) if u < w else (w, u)
                t = (cmap[u], len(order), pattern.label(u),
                     pattern.edge_label(u, w), pattern.label(w))
                cmap[w] = len(order)
                order.append(w)
                grow(code + [t], cmap, order, rmp[:pos + 1] + [w], used | {e})
                order.pop()
                del cmap[w]

    for root in range(n):
        grow([], {root: 0}, [root], [root], frozenset())
    return best[0]


@lru_cache(maxsize=None)
def is_minimal(code: Code) -> bool:
    """True iff the code equals the canonical code of its own pattern."""
    if not code:
        return True
    return code == min_dfs_code(graph_of_code(code))


def _connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in g.adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count
