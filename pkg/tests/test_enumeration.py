import pytest

from domcore import (
    GraphError,
    count_connected_graphs,
    count_graphs,
    enumerate_connected,
    enumerate_trees,
)
from domcore.canonical import canonical_form
from domcore.enumeration import (
    ENUMERATION_MAX,
    TREE_ENUMERATION_MAX,
    labeled_connected_bitmap,
    relabeling_closure_bitmap,
)
from domcore.graph import is_connected
from domcore.recognize import is_tree

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}
LABELED_CONNECTED = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}


def test_stream_counts_match_known_sequence():
    for n in range(1, 8):
        assert sum(1 for _ in enumerate_connected(n)) == CONNECTED_COUNTS[n]


def test_stream_is_isomorph_free_and_connected():
    for n in range(1, 8):
        seen = set()
        for g in enumerate_connected(n):
            assert g.n == n
            assert is_connected(g)
            form = canonical_form(g)
            assert form not in seen
            seen.add(form)


def test_analytic_counts():
    for n, want in ALL_COUNTS.items():
        assert count_graphs(n) == want
    for n, want in CONNECTED_COUNTS.items():
        assert count_connected_graphs(n) == want
    assert count_connected_graphs(9) == 261080
    assert count_graphs(9) == 274668


def test_tree_counts():
    for n, want in TREE_COUNTS.items():
        stream = list(enumerate_trees(n))
        assert len(stream) == want
        for t in stream:
            assert is_tree(t)


def test_labeled_bitmap_counts():
    for n, want in LABELED_CONNECTED.items():
        _, count = labeled_connected_bitmap(n)
        assert count == want


def test_relabeling_closure_reaches_every_labeled_graph():
    for n in range(1, 7):
        oracle, oracle_count = labeled_connected_bitmap(n)
        closure, count = relabeling_closure_bitmap(enumerate_connected(n), n)
        assert closure == oracle
        assert count == oracle_count


def test_enumeration_bounds():
    with pytest.raises(GraphError):
        list(enumerate_connected(ENUMERATION_MAX + 1))
    with pytest.raises(GraphError):
        list(enumerate_trees(TREE_ENUMERATION_MAX + 1))
    with pytest.raises(GraphError):
        list(enumerate_connected(0))
