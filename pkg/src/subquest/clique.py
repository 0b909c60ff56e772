"""Maximum-clique discovery plugged into the basic exploration loop.

Every subgraph carries its candidate set: the vertices that can join the
clique while keeping it a clique, restricted to ids above the largest
member (the duplicate-avoidance rule).  Expansion is *targeted*: only
candidate-set vertices are admitted, so every constructed subgraph is a
clique and relevance is unconditional.  Priority (size, candidate count)
grows bigger cliques first and, within a size, the more promising ones;
size + candidates bounds the largest reachable clique, which gives the
domination test.
"""

from __future__ import annotations

import struct

from .engine import (Computation, Subgraph, expand_with_vertex,
                     vertex_oriented_expansions)
from .vpq import decode_subgraph, encode_subgraph

_U32 = struct.Struct("<I")


class CliqueState:
    __slots__ = ("candidates",)

    def __init__(self, candidates):
        self.candidates = frozenset(candidates)


def clique_candidates(graph, vertices) -> frozenset:
    """Candidate set recomputed from scratch.

    Start from the neighbors of the first vertex; for every later member
    drop that member and keep only its neighbors; finally restrict to ids
    above the largest member.  The incremental maintenance in the
    computation must always agree with this.
    """
    first = vertices[0]
    p = set(graph.adjacency[first])
    for v in vertices[1:]:
        p.discard(v)
        p &= set(graph.adjacency[v])
    cap = max(vertices)
    return frozenset(x for x in p if x > cap)


class CliqueComputation(Computation):
    """Top-k cliques ranked by (size, candidate count)."""

    def __init__(self, graph):
        self.graph = graph

    def units(self, graph):
        return [
            Subgraph((v,), frozenset(),
                     CliqueState(w for w in graph.adjacency[v] if w > v))
            for v in graph.vertices()
        ]

    def expansions(self, s: Subgraph):
        return vertex_oriented_expansions(self.graph, s)

    def expandable(self, s: Subgraph, v: int) -> bool:
        return v in s.ext.candidates

    def expand(self, s: Subgraph, v: int) -> Subgraph:
        # Child candidates: parent candidates that neighbor v, above v.
        adj = self.graph.adjacency[v]
        ext = CliqueState(p for p in s.ext.candidates if p > v and p in adj)
        return expand_with_vertex(self.graph, s, v, ext)

    def relevant(self, s: Subgraph) -> bool:
        return True

    def priority(self, s: Subgraph):
        return (len(s.vertices), len(s.ext.candidates))

    def dominated(self, s: Subgraph, other: Subgraph) -> bool:
        # No expansion of s can reach the size of the clique `other`.
        return len(s.vertices) + len(s.ext.candidates) < len(other.vertices)

    # -- spill codec

    def item_codec(self):
        def encode(s):
            return encode_subgraph(s, _encode_state)

        def decode(payload):
            return decode_subgraph(payload, _decode_state)

        return encode, decode


def _encode_state(state: CliqueState) -> bytes:
    cands = sorted(state.candidates)
    return b"".join([_U32.pack(len(cands))] + [_U32.pack(c) for c in cands])


def _decode_state(raw: bytes, vertices, edges) -> CliqueState:
    (n,) = _U32.unpack_from(raw, 0)
    return CliqueState(_U32.unpack_from(raw, 4 + 4 * i)[0] for i in range(n))
