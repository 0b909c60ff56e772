"""Best-first subgraph exploration over a pluggable computation.

Two loops are provided.  ``run_basic`` explores individual subgraphs:
seed unit subgraphs, repeatedly dequeue the highest-priority one, offer it
to the top-k result set, and expand it unless the current k-th result
proves that no descendant can still matter.  ``run_aggregate`` does the
same for *groups* of subgraphs sharing a grouping key (e.g. a pattern),
expanding every member of a dequeued group and regrouping the children.

Priorities are fixed-arity numeric tuples compared lexicographically.
A single run is strictly sequential; Graph and Computation objects must be
read-only so independent runs can share them across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field


# --------------------------------------------------------------------------
# priorities

def compare_priorities(p, q) -> int:
    """Lexicographic comparison of two equal-arity priority vectors.

    Returns -1, 0, or 1.  Raises ValueError on arity mismatch.
    """
    if len(p) != len(q):
        raise ValueError(f"priority arity mismatch: {len(p)} vs {len(q)}")
    for a, b in zip(p, q):
        if a < b:
            return -1
        if a > b:
            return 1
    return 0


def priority_sort_key(priority, seq: int):
    """Heap key: larger priority first, FIFO (insertion order) on ties."""
    return tuple(-float(v) for v in priority), seq


# --------------------------------------------------------------------------
# core records

@dataclass(frozen=True, eq=False)
class Subgraph:
    """A connected piece of the data graph plus computation-specific state.

    ``vertices`` is insertion-ordered (the construction order matters for
    some computations); ``edges`` holds normalized (u, v) pairs with u < v.
    ``ext`` is opaque to the exploration loops.
    """
    vertices: tuple[int, ...]
    edges: frozenset
    ext: object = None

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def shape(self):
        """Vertex/edge sets only, for duplicate detection in tests."""
        return frozenset(self.vertices), self.edges


class SubgraphGroup:
    """All discovered subgraphs sharing one grouping key."""

    __slots__ = ("key", "members")

    def __init__(self, key):
        self.key = key
        self.members = []

    def add(self, s: Subgraph):
        self.members.append(s)

    def __len__(self):
        return len(self.members)


@dataclass
class ExplorationStats:
    """Work counters for one run.

    ``candidate_subgraphs`` counts every Subgraph construction, units
    included.  The pruning counters record how often expansion was skipped
    because the k-th result already dominated the item (parent side) or a
    freshly built child/child group (child side).
    """
    candidate_subgraphs: int = 0
    pruned_at_parent: int = 0
    pruned_at_child: int = 0
    dequeues: int = 0


class ResultSet:
    """Top-k buffer: the k highest-priority entries plus ties at the bound.

    Entries are kept sorted by priority descending, arrival order on ties.
    After every offer no retained entry is strictly below the k-th highest
    priority present; the set may exceed k only when entries tie at the
    k-th priority.
    """

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.k = k
        self.entries = []  # (item, priority) tuples

    def full(self) -> bool:
        return len(self.entries) >= self.k

    def kth_item(self):
        return self.entries[self.k - 1][0]

    def kth_priority(self):
        return self.entries[self.k - 1][1]

    def offer(self, item, priority) -> bool:
        """Insert iff the set is not full or priority >= the k-th priority.

        Entries strictly below the updated k-th priority are evicted.
        Returns whether the item was inserted.
        """
        priority = tuple(priority)
        if self.entries:
            if len(priority) != len(self.entries[0][1]):
                raise ValueError("priority arity mismatch in result set")
        if self.full() and compare_priorities(priority, self.kth_priority()) < 0:
            return False
        pos = len(self.entries)
        for i, (_, q) in enumerate(self.entries):
            if compare_priorities(q, priority) < 0:
                pos = i
                break
        self.entries.insert(pos, (item, priority))
        if len(self.entries) > self.k:
            bound = self.kth_priority()
            self.entries = [e for e in self.entries
                            if compare_priorities(e[1], bound) >= 0]
        return True

    def items(self):
        return [item for item, _ in self.entries]

    def priorities(self):
        return [p for _, p in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


# --------------------------------------------------------------------------
# computation contract

class Computation:
    """Behavioral contract consumed by the exploration loops.

    Subclasses supply seed subgraphs, candidate expansion deltas, the child
    constructor, and the ranking/pruning predicates.  ``expandable`` and
    ``dominated`` default to the no-optimization baseline (always expand,
    never prune); ``dominated(x, y) == True`` must mean every item reachable
    by expanding x has a priority strictly below ``priority(y)``.
    """

    def units(self, graph):
        raise NotImplementedError

    def expansions(self, s):
        raise NotImplementedError

    def expand(self, s, delta) -> Subgraph:
        raise NotImplementedError

    def expandable(self, s, delta) -> bool:
        return True

    def relevant(self, item) -> bool:
        raise NotImplementedError

    def priority(self, item):
        raise NotImplementedError

    def dominated(self, item, other) -> bool:
        return False


class AggregateComputation(Computation):
    """Adds the grouping surface used by ``run_aggregate``."""

    def key(self, s):
        raise NotImplementedError

    def make_group(self, key) -> SubgraphGroup:
        return SubgraphGroup(key)


class WithoutPruning:
    """Wrapper that disables domination, keeping everything else intact."""

    def __init__(self, inner: Computation):
        self._inner = inner

    def dominated(self, item, other) -> bool:
        return False

    def __getattr__(self, name):
        return getattr(self._inner, name)


# --------------------------------------------------------------------------
# expansion helpers

def vertex_oriented_expansions(graph, s: Subgraph):
    """Growth vertices for s: neighbors of V_s with id above max(V_s).

    The id-ordering rule makes each reachable vertex set constructible in
    exactly one order (ascending), so no subgraph is generated twice.
    Expanding by a returned vertex adds it plus all its edges into V_s.
    """
    cap = max(s.vertices)
    out = set()
    for u in s.vertices:
        for w in graph.adjacency[u]:
            if w > cap:
                out.add(w)
    return sorted(out)


def expand_with_vertex(graph, s: Subgraph, v: int, ext=None) -> Subgraph:
    """Child of s that adds vertex v and every edge between v and V_s."""
    new_edges = {(u, v) if u < v else (v, u)
                 for u in s.vertices if graph.has_edge(u, v)}
    return Subgraph(s.vertices + (v,), s.edges | new_edges, ext)


def edge_oriented_expansions(graph, s: Subgraph):
    """Candidate growth edges for s under the unique-parent rule.

    A child edge set keeps s as its canonical parent iff the added edge is
    the largest edge whose removal leaves the child connected.  Rooting
    1-edge children at their smaller endpoint extends the rule down to
    single-vertex seeds.  Together this yields each connected edge subgraph
    from exactly one parent across a whole run, with no seen-set.
    """
    if not s.edges:
        v = s.vertices[0]
        return [(v, w) for w in graph.adjacency[v] if v < w]
    inside = set(s.vertices)
    candidates = set()
    for u in inside:
        for w in graph.adjacency[u]:
            e = (u, w) if u < w else (w, u)
            if e not in s.edges:
                candidates.add(e)
    return [e for e in sorted(candidates) if _is_canonical_growth(s, e)]


def expand_with_edge(graph, s: Subgraph, e, ext=None) -> Subgraph:
    """Child of s that adds edge e (and its new endpoint, if any)."""
    u, v = e
    vertices = s.vertices
    for w in (u, v):
        if w not in vertices:
            vertices = vertices + (w,)
    return Subgraph(vertices, s.edges | {e}, ext)


def _is_canonical_growth(s: Subgraph, e) -> bool:
    # Reject if any edge larger than e could be removed from the child
    # while keeping the remaining edges connected; such a child belongs to
    # a different (lexicographically later) parent.
    child = s.edges | {e}
    for f in child:
        if f > e and _connected_without(child, f):
            return False
    return True


def _connected_without(edge_set, removed) -> bool:
    rest = [e for e in edge_set if e != removed]
    if not rest:
        return False
    adj = {}
    for u, v in rest:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = rest[0][0]
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


# --------------------------------------------------------------------------
# exploration loops

def run_basic(graph, computation: Computation, k: int, queue=None):
    """Top-k discovery over individual subgraphs.

    Seeds ``computation.units(graph)``, then loops: dequeue the maximum,
    offer it to the result set when relevant, skip expansion when the k-th
    result dominates it, otherwise build each expandable child and enqueue
    the ones not already dominated.  Returns (ResultSet, ExplorationStats).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if queue is None:
        from .queues import MemoryPriorityQueue
        queue = MemoryPriorityQueue()
    stats = ExplorationStats()
    results = ResultSet(k)
    for s in computation.units(graph):
        stats.candidate_subgraphs += 1
        queue.enqueue(s, computation.priority(s))
    while (entry := queue.dequeue_max()) is not None:
        s, prio = entry
        stats.dequeues += 1
        if computation.relevant(s):
            results.offer(s, prio)
        if results.full() and computation.dominated(s, results.kth_item()):
            stats.pruned_at_parent += 1
            continue
        for delta in computation.expansions(s):
            if not computation.expandable(s, delta):
                continue
            child = computation.expand(s, delta)
            stats.candidate_subgraphs += 1
            if results.full() and computation.dominated(child, results.kth_item()):
                stats.pruned_at_child += 1
            else:
                queue.enqueue(child, computation.priority(child))
    return results, stats


def run_aggregate(graph, computation: AggregateComputation, k: int, queue=None):
    """Top-k discovery over subgraph groups.

    Units are grouped by ``computation.key`` and the groups enqueued.  Each
    dequeued group is offered to the result set when relevant; unless
    dominated, every member is expanded and the children are regrouped into
    a fresh aggregator whose non-dominated groups are enqueued.  Groups from
    different iterations are never merged.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if queue is None:
        from .queues import MemoryPriorityQueue
        queue = MemoryPriorityQueue()
    stats = ExplorationStats()
    results = ResultSet(k)
    seeds = {}
    for s in computation.units(graph):
        stats.candidate_subgraphs += 1
        key = computation.key(s)
        grp = seeds.get(key)
        if grp is None:
            grp = seeds[key] = computation.make_group(key)
        grp.add(s)
    for grp in seeds.values():
        queue.enqueue(grp, computation.priority(grp))
    while (entry := queue.dequeue_max()) is not None:
        grp, prio = entry
        stats.dequeues += 1
        if computation.relevant(grp):
            results.offer(grp, prio)
        if results.full() and computation.dominated(grp, results.kth_item()):
            stats.pruned_at_parent += 1
            continue
        fresh = {}
        for s in grp.members:
            for delta in computation.expansions(s):
                if not computation.expandable(s, delta):
                    continue
                child = computation.expand(s, delta)
                stats.candidate_subgraphs += 1
                ckey = computation.key(child)
                cgrp = fresh.get(ckey)
                if cgrp is None:
                    cgrp = fresh[ckey] = computation.make_group(ckey)
                cgrp.add(child)
        for cgrp in fresh.values():
            if results.full() and computation.dominated(cgrp, results.kth_item()):
                stats.pruned_at_child += 1
            else:
                queue.enqueue(cgrp, computation.priority(cgrp))
    return results, stats
