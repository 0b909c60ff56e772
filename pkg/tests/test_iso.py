import itertools
import random

import pytest

from subquest import (Graph, IndexDepthError, IsomorphismComputation,
                      VertexIndex, WithoutPruning, brute_topk_iso, build_index,
                      load_index, run_basic)

from randgraphs import random_connected_query, random_labeled

A = 0


def is_isomorphic_match(g, query, s):
    """Direct bijection check, independent of the search machinery."""
    if (len(s.vertices) != query.vertex_count
            or len(s.edges) != query.edge_count):
        return False
    for perm in itertools.permutations(s.vertices):
        if any(query.label(qv) != g.label(perm[qv])
               for qv in query.vertices()):
            continue
        image = {(min(perm[a], perm[b]), max(perm[a], perm[b]))
                 for a, b in query.edges()}
        if image == set(s.edges):
            return True
    return False


# --------------------------------------------------------------------------
# index

def test_index_shells_on_path(path4):
    idx = build_index(path4, 2)
    assert idx.lookup(1, 1, A) == 2          # best neighbor degree of v2
    assert idx.lookup(0, 1, A) == 2
    assert idx.lookup(0, 2, A) == 2
    assert idx.lookup(3, 1, A) == 2
    assert idx.lookup(0, 3, A) is None       # depth-2 index
    idx3 = build_index(path4, 3)
    assert idx3.lookup(0, 3, A) == 1         # the far endpoint


def test_index_isolated_vertex():
    g = Graph(1, [], vertex_labels=[5])
    idx = build_index(g, 2)
    assert idx.table == {}


def test_index_threads_deterministic(two_labels):
    one = build_index(two_labels, 3, threads=1)
    four = build_index(two_labels, 3, threads=4)
    assert one.table == four.table


def test_index_save_load_round_trip(path4, tmp_path):
    idx = build_index(path4, 2)
    p = tmp_path / "g.idx"
    idx.save(p)
    loaded = load_index(p)
    assert loaded.hops == idx.hops
    assert loaded.table == idx.table
    # exact textual format: header then sorted rows
    lines = p.read_text().splitlines()
    assert lines[0] == "D 2"
    assert lines[1:] == sorted(lines[1:], key=lambda s: [int(x) for x in s.split()])
    assert all(len(line.split()) == 4 for line in lines[1:])


def test_index_max_within_uses_whole_radius():
    # hub at distance 1, weaker vertex at distance 2: radius max covers both
    g = Graph(5, [(0, 1), (1, 2), (1, 3), (1, 4)], vertex_labels=[A] * 5)
    idx = build_index(g, 2)
    assert idx.lookup(2, 1, A) == 4
    assert idx.lookup(2, 2, A) == 1
    assert idx.max_within(2, 2, A) == 4


# --------------------------------------------------------------------------
# matching

def test_unit_bounds_on_path(path4, query_aa):
    comp = IsomorphismComputation(path4, query_aa)
    units = comp.units(path4)
    bounds = [comp.priority(s)[1] for s in units]
    assert bounds == [3, 4, 4, 3]
    assert all(comp.priority(s)[0] == 0 for s in units)


def test_expandable_examples(path4, query_aa):
    comp = IsomorphismComputation(path4, query_aa)
    s2 = [s for s in comp.units(path4) if s.vertices == (1,)][0]
    assert comp.expandable(s2, (1, 2))
    match = comp.expand(s2, (1, 2))
    assert comp.relevant(match)
    assert match.ext.score == 4
    # a one-edge query cannot grow past one edge
    assert not comp.expandable(match, (2, 3))
    assert not comp.expandable(match, (0, 1))


def test_expandable_rejects_label_mismatch(two_labels, query_abb):
    comp = IsomorphismComputation(two_labels, query_abb)
    # internal 1 is the b-hub; edge to internal 0 (label a) fits q0-q1,
    # but a b-b edge can never map onto the a-b query edge from a b-seed
    unit_b = [s for s in comp.units(two_labels) if s.vertices == (2,)][0]
    assert comp.expandable(unit_b, (2, 3))
    g = Graph(2, [(0, 1)], vertex_labels=[0, 2])
    comp2 = IsomorphismComputation(g, Graph(2, [(0, 1)], vertex_labels=[0, 0]))
    unit = comp2.units(g)[0]
    assert unit.vertices == (0,)
    assert not comp2.expandable(unit, (0, 1))


def test_fully_matched_bound_is_score(path4, query_aa):
    comp = IsomorphismComputation(path4, query_aa)
    s2 = [s for s in comp.units(path4) if s.vertices == (1,)][0]
    match = comp.expand(s2, (1, 2))
    assert match.ext.upper == 0
    assert comp.priority(match) == (1, 4)


def test_path_run_prunes_weak_units(path4, query_aa):
    comp = IsomorphismComputation(path4, query_aa)
    results, stats = run_basic(path4, comp, 1)
    (best, prio), = list(results)
    assert best.ext.score == 4
    assert prio == (1.0, 4.0)
    units = comp.units(path4)
    assert comp.dominated(units[0], best)      # bound 3 < score 4
    assert comp.dominated(units[3], best)
    assert not comp.dominated(units[1], best)  # bound 4 is not strictly below
    assert stats.pruned_at_parent >= 2


def test_four_matches_on_two_label_graph(two_labels, query_abb):
    comp = IsomorphismComputation(two_labels, query_abb)
    results, _ = run_basic(two_labels, comp, 4)
    assert len(results) == 4
    scores = sorted((int(s.ext.score) for s, _ in results), reverse=True)
    assert scores == [7, 7, 6, 6]
    for s, _ in results:
        assert is_isomorphic_match(two_labels, query_abb, s)


def test_results_are_sound_matches():
    rng = random.Random(31)
    for _ in range(6):
        g = random_labeled(rng.randint(3, 10), 0.35, 2, rng, max_edges=16)
        q = random_connected_query(rng.randint(1, 4), 2, rng)
        comp = IsomorphismComputation(g, q)
        results, _ = run_basic(g, comp, 3)
        for s, _ in results:
            assert is_isomorphic_match(g, q, s)


@pytest.mark.parametrize("seed", range(10))
def test_topk_scores_match_oracle(seed):
    rng = random.Random(700 + seed)
    g = random_labeled(rng.randint(3, 11), 0.35, 3, rng, max_edges=18)
    q = random_connected_query(rng.randint(1, 4), 3, rng)
    comp = IsomorphismComputation(g, q)
    for k in (1, 3):
        results, _ = run_basic(g, comp, k)
        got = sorted((int(s.ext.score) for s, _ in results), reverse=True)
        assert got == brute_topk_iso(g, q, k), f"seed={seed} k={k}"


@pytest.mark.parametrize("seed", range(6))
def test_pruned_and_unpruned_agree(seed):
    rng = random.Random(800 + seed)
    g = random_labeled(rng.randint(3, 10), 0.4, 2, rng, max_edges=16)
    q = random_connected_query(rng.randint(2, 4), 2, rng)
    comp = IsomorphismComputation(g, q)
    pruned, ps = run_basic(g, comp, 2)
    plain, ns = run_basic(g, WithoutPruning(comp), 2)
    assert sorted(pruned.priorities()) == sorted(plain.priorities())
    assert ps.candidate_subgraphs <= ns.candidate_subgraphs


class RecordingIso(IsomorphismComputation):
    """Tracks parent/child construction pairs for ancestry checks."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.children = {}

    def expand(self, s, e):
        child = super().expand(s, e)
        self.children.setdefault(id(s), (s, []))[1].append(child)
        return child


def test_bounds_cover_every_completed_descendant():
    rng = random.Random(90)
    for _ in range(8):
        g = random_labeled(rng.randint(4, 10), 0.4, 2, rng, max_edges=16)
        q = random_connected_query(rng.randint(2, 4), 2, rng)
        comp = RecordingIso(g, q)
        run_basic(g, WithoutPruning(comp), 10 ** 9)

        def matches_below(s):
            out = [s.ext.score] if comp.relevant(s) else []
            _, kids = comp.children.get(id(s), (None, []))
            for c in kids:
                out.extend(matches_below(c))
            return out

        for s, kids in comp.children.values():
            bound = s.ext.score + s.ext.upper
            for c in kids:
                for final in matches_below(c):
                    assert final <= bound
            if s.ext.upper == float("-inf"):
                assert all(not matches_below(c) for c in kids)


def test_hop_beyond_index_depth_raises(path4):
    shallow = build_index(path4, 1)
    q = Graph(3, [(0, 1), (1, 2)], vertex_labels=[A, A, A])
    with pytest.raises(IndexDepthError):
        IsomorphismComputation(path4, q, index=shallow).units(path4)


def test_disconnected_query_rejected(path4):
    q = Graph(3, [(0, 1)], vertex_labels=[A, A, A])
    with pytest.raises(ValueError):
        IsomorphismComputation(path4, q)


def test_single_vertex_query(two_labels):
    q = Graph(1, [], vertex_labels=[1])
    comp = IsomorphismComputation(two_labels, q)
    results, _ = run_basic(two_labels, comp, 1)
    # the three b-vertices have degrees 3, 2, 3; ties retained at k-th
    scores = sorted((int(s.ext.score) for s, _ in results), reverse=True)
    assert scores == [3, 3]
