import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subquest import Graph, GraphFormatError, load_edge_list, load_lg

from conftest import data_path


def test_edge_list_dedups_and_normalizes(tmp_path):
    p = tmp_path / "g.edges"
    p.write_text("1 2\n2 1\n1 2\n")
    g = load_edge_list(p)
    assert g.vertex_count == 2
    assert g.edge_count == 1
    assert g.edges() == [(0, 1)]


def test_edge_list_empty_file(tmp_path):
    p = tmp_path / "empty.edges"
    p.write_text("")
    g = load_edge_list(p)
    assert g.vertex_count == 0 and g.edge_count == 0


def test_edge_list_demo_fixture(tri_tail):
    assert tri_tail.vertex_count == 4
    assert tri_tail.edge_count == 4
    assert tri_tail.original_ids == (1, 2, 3, 4)
    assert tri_tail.edges() == [(0, 1), (0, 2), (1, 2), (2, 3)]


def test_edge_list_comments_and_remap(tmp_path):
    p = tmp_path / "g.edges"
    p.write_text("# header\n% other comment\n10 30\n30 20\n")
    g = load_edge_list(p)
    assert g.original_ids == (10, 20, 30)
    assert g.edges() == [(0, 2), (1, 2)]


def test_edge_list_parse_error_carries_line_number(tmp_path):
    p = tmp_path / "bad.edges"
    p.write_text("1 2\nnot numbers\n")
    with pytest.raises(GraphFormatError, match="line 2"):
        load_edge_list(p)
    p.write_text("1 2 3\n")
    with pytest.raises(GraphFormatError, match="line 1"):
        load_edge_list(p)


def test_edge_list_rejects_self_loop_with_line_number(tmp_path):
    p = tmp_path / "loop.edges"
    p.write_text("1 2\n3 3\n")
    with pytest.raises(GraphFormatError, match="line 2"):
        load_edge_list(p)


def test_lg_two_label_fixture(two_labels):
    g = two_labels
    assert g.vertex_count == 5
    assert g.edge_count == 5
    assert g.vertex_labels == (0, 1, 1, 1, 0)
    assert g.original_ids == (1, 2, 3, 4, 5)
    assert g.has_edge(1, 2) and g.has_edge(2, 3) and not g.has_edge(0, 4)


def test_lg_single_vertex(tmp_path):
    p = tmp_path / "one.lg"
    p.write_text("v 0 7\n")
    g = load_lg(p)
    assert g.vertex_count == 1
    assert g.vertex_labels == (7,)
    assert g.edge_count == 0


def test_lg_query_fixture(query_abb):
    assert query_abb.vertex_count == 3
    assert query_abb.edge_count == 2
    assert query_abb.vertex_labels == (0, 1, 1)


def test_lg_rejects_id_gap(tmp_path):
    p = tmp_path / "gap.lg"
    p.write_text("v 0 1\nv 2 1\ne 0 2\n")
    with pytest.raises(GraphFormatError, match="consecutive"):
        load_lg(p)


def test_lg_rejects_missing_label(tmp_path):
    p = tmp_path / "nolabel.lg"
    p.write_text("v 0\n")
    with pytest.raises(GraphFormatError, match="label"):
        load_lg(p)


def test_lg_rejects_dangling_endpoint(tmp_path):
    p = tmp_path / "dangling.lg"
    p.write_text("v 0 1\nv 1 1\ne 0 5\n")
    with pytest.raises(GraphFormatError, match="undeclared"):
        load_lg(p)


def test_lg_rejects_duplicate_vertex(tmp_path):
    p = tmp_path / "dup.lg"
    p.write_text("v 0 1\nv 0 2\n")
    with pytest.raises(GraphFormatError, match="duplicate"):
        load_lg(p)


def test_lg_edge_labels(tmp_path):
    p = tmp_path / "el.lg"
    p.write_text("v 0 1\nv 1 2\nv 2 2\ne 0 1 5\ne 1 2\n")
    g = load_lg(p)
    assert g.edge_label(0, 1) == 5
    assert g.edge_label(1, 0) == 5
    assert g.edge_label(1, 2) == 0


def test_degree(two_labels, path4):
    # fixture id 4 is internal 3: neighbors 2, 3, 5
    assert two_labels.degree(3) == 3
    assert path4.degree(1) == 2
    with pytest.raises(ValueError):
        path4.degree(99)


def test_degree_isolated_vertex(tmp_path):
    p = tmp_path / "iso.lg"
    p.write_text("v 0 1\nv 1 1\nv 2 1\ne 0 1\n")
    g = load_lg(p)
    assert g.degree(2) == 0


def test_self_loop_rejected_in_lg(tmp_path):
    p = tmp_path / "loop.lg"
    p.write_text("v 0 1\ne 0 0\n")
    with pytest.raises(GraphFormatError, match="self-loop"):
        load_lg(p)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True,
                          max_size=len(pairs))) if pairs else []
    labels = draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    elabels = {e: draw(st.integers(0, 2)) for e in edges}
    return Graph(n, edges, vertex_labels=labels, edge_labels=elabels)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_lg_round_trip(tmp_path_factory, g):
    path = tmp_path_factory.mktemp("rt") / "g.lg"
    path.write_text(g.to_lg())
    assert load_lg(path) == g


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_edge_lookup_symmetric_and_degree_sum(g):
    for u, v in g.edges():
        assert g.has_edge(u, v) and g.has_edge(v, u)
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.edge_count


def test_adjacency_strictly_ascending(two_labels, tri_tail):
    for g in (two_labels, tri_tail):
        for ns in g.adjacency:
            assert list(ns) == sorted(set(ns))


def test_fixture_files_unchanged():
    # loaders and the CLI tests rely on these exact structures
    assert data_path("g_tri_tail.edges").read_text() == "1 2\n1 3\n2 3\n3 4\n"
