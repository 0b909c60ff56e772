import pytest

from subquest import (BudgetExceededError, EnumerationBudget, Graph,
                      brute_max_clique, brute_pattern_freqs, brute_topk_iso,
                      enumerate_connected_subgraphs)

A, B = 0, 1


def cliques_among(subgraphs):
    return [s for s in subgraphs
            if len(s.edges) == len(s.vertices) * (len(s.vertices) - 1) // 2]


def test_demo_graph_has_nine_cliques(tri_tail):
    subs = enumerate_connected_subgraphs(tri_tail, mode="vertex")
    assert len(subs) == 12
    cliques = cliques_among(subs)
    assert len(cliques) == 9
    assert sorted(len(c.vertices) for c in cliques) == [1, 1, 1, 1, 2, 2, 2, 2, 3]


def test_single_edge_graph_edge_mode():
    g = Graph(2, [(0, 1)])
    subs = enumerate_connected_subgraphs(g, mode="edge")
    assert len(subs) == 3
    shapes = {s.shape() for s in subs}
    assert (frozenset({0}), frozenset()) in shapes
    assert (frozenset({0, 1}), frozenset({(0, 1)})) in shapes


def test_triangle_vertex_mode():
    g = Graph(3, [(0, 1), (0, 2), (1, 2)])
    assert len(enumerate_connected_subgraphs(g, mode="vertex")) == 7


def test_enumeration_is_deterministic(tri_tail):
    a = enumerate_connected_subgraphs(tri_tail, mode="edge")
    b = enumerate_connected_subgraphs(tri_tail, mode="edge")
    assert [s.shape() for s in a] == [s.shape() for s in b]


def test_budget_rejects_oversized_graph():
    g = Graph(14, [(i, i + 1) for i in range(13)])
    with pytest.raises(BudgetExceededError):
        enumerate_connected_subgraphs(g, EnumerationBudget(max_vertices=12))
    with pytest.raises(BudgetExceededError):
        brute_max_clique(g, EnumerationBudget(max_vertices=12))


def test_budget_caps_subgraph_count():
    g = Graph(8, [(u, v) for u in range(8) for v in range(u + 1, 8)])
    tight = EnumerationBudget(max_vertices=8, max_edges=28, max_subgraphs=10)
    with pytest.raises(BudgetExceededError):
        enumerate_connected_subgraphs(g, tight)


def test_brute_max_clique(tri_tail):
    size, witness = brute_max_clique(tri_tail)
    assert size == 3
    assert sorted(witness) == [0, 1, 2]
    assert brute_max_clique(Graph(0, [])) == (0, ())
    assert brute_max_clique(Graph(3, []))[0] == 1


def test_pattern_freqs_on_two_label_graph(two_labels):
    one = brute_pattern_freqs(two_labels, 1)
    assert one == {((0, 1, A, 0, B),): 2, ((0, 1, B, 0, B),): 3}
    two = brute_pattern_freqs(two_labels, 2)
    assert two == {((0, 1, A, 0, B), (1, 2, B, 0, B)): 2,
                   ((0, 1, B, 0, B), (1, 2, B, 0, B)): 3}


def test_pattern_freqs_requires_labels(tri_tail):
    with pytest.raises(ValueError):
        brute_pattern_freqs(tri_tail, 1)


def test_topk_iso_scores(two_labels, query_abb):
    assert brute_topk_iso(two_labels, query_abb, 1) == [7, 7]
    assert brute_topk_iso(two_labels, query_abb, 4) == [7, 7, 6, 6]
    assert brute_topk_iso(two_labels, query_abb, 99) == [7, 7, 6, 6]


def test_topk_iso_no_matches(two_labels):
    q = Graph(2, [(0, 1)], vertex_labels=[7, 7])
    assert brute_topk_iso(two_labels, q, 3) == []
