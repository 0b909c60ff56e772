from pathlib import Path

import pytest

from subquest import load_edge_list, load_lg

DATA = Path(__file__).parent / "data"


def data_path(name: str) -> Path:
    return DATA / name


@pytest.fixture
def tri_tail():
    """Triangle 1-2-3 with a pendant vertex 4 (unlabeled, 1-based file ids)."""
    return load_edge_list(DATA / "g_tri_tail.edges")


@pytest.fixture
def two_labels():
    """5 vertices labeled a/b: a-b bridge into a b-triangle, tail back to a.

    Labels: 1:a 2:b 3:b 4:b 5:a with edges 1-2, 2-3, 2-4, 3-4, 4-5
    (a = 0, b = 1).
    """
    return load_lg(DATA / "g_two_labels.lg")


@pytest.fixture
def path4():
    """Path 1-2-3-4, every vertex labeled a (= 0)."""
    return load_lg(DATA / "g_path4.lg")


@pytest.fixture
def query_abb():
    return load_lg(DATA / "q_abb.lg")


@pytest.fixture
def query_aa():
    return load_lg(DATA / "q_aa.lg")
