import os
import random

import pytest

from domcore import GraphError, build_graph, parse_graph6, write_graph6
from domcore.classify import classification_masks
from domcore.graph import bits, cut_vertices
from domcore.search import (
    DEFAULT_SIGNATURE_NAMES,
    SEARCH_MAX,
    SIGNATURES,
    PartitionSignature,
    cubic_bipartite_filter,
    evaluate_signature,
    has_k4,
    line_graph_family_filter,
    search_signature,
    witness_directory,
    write_witness_file,
)
from helpers import complete, complete_bipartite, cycle, path, star

# smallest orders established by exhaustive scans; raising any of these
# numbers is a regression
MIN_ORDER_ALL_ZERO_NONEMPTY_CORE = 7
MIN_ORDER_ONE_PLUS_REST_ZERO = 6
MIN_ORDER_COVER_CORE_ZERO_ANTICORE = 7
MIN_ORDER_CUT_VERTEX_CORE_ZERO = 9

CUT_VERTEX_WITNESSES = ("Hra?W_@", "Hr_OOGA")
EVERY_CLASS_WITNESS = "Hr`?XCQ"


def test_registry_names():
    assert set(DEFAULT_SIGNATURE_NAMES) <= set(SIGNATURES)
    assert "min-plus-zero-minus-empty-anticore" in SIGNATURES
    for name, sig in SIGNATURES.items():
        assert sig.name == name


def test_unknown_atom_rejected():
    sig = PartitionSignature(name="bad", description="", nonempty=("halo",))
    with pytest.raises(GraphError):
        sig.evaluate(path(2), classification_masks(path(2)))


def test_prefilter_is_sound(corpus6):
    for _, g in corpus6:
        masks = classification_masks(g)
        for sig in SIGNATURES.values():
            assert evaluate_signature(sig, g) == sig.evaluate(g, masks)


def test_signature_verdicts_survive_relabeling(corpus6):
    rng = random.Random(97)
    for _, g in corpus6:
        perm = list(range(g.n))
        rng.shuffle(perm)
        edges = [(perm[u], perm[v]) for u, v in g.edges()]
        h = build_graph(g.n, edges)
        for sig in SIGNATURES.values():
            assert evaluate_signature(sig, g) == evaluate_signature(sig, h)


def test_all_zero_nonempty_core_minimum_order():
    result = search_signature(7, SIGNATURES["all-zero-nonempty-core"])
    assert [s.witness_count for s in result.scans] == [0, 0, 0, 0, 0, 0, 5]
    assert all(s.complete for s in result.scans)
    assert {n for n, _ in result.witnesses} == {MIN_ORDER_ALL_ZERO_NONEMPTY_CORE}


def test_one_plus_rest_zero_minimum_order():
    result = search_signature(8, SIGNATURES["one-plus-rest-zero-nonempty-core-zero"])
    assert result.scans[-1].n == MIN_ORDER_ONE_PLUS_REST_ZERO
    assert result.scans[-1].witness_count == 1
    assert write_graph6(result.witnesses[0][1]) == "Er_G"


def test_cover_core_zero_anticore_minimum_order():
    result = search_signature(7, SIGNATURES["cover-core-zero-anticore"])
    assert result.scans[-1].n == MIN_ORDER_COVER_CORE_ZERO_ANTICORE
    assert result.scans[-1].witness_count == 2
    assert [s.witness_count for s in result.scans[:-1]] == [0] * 6


def test_cut_vertex_core_zero_absent_through_seven():
    result = search_signature(7, SIGNATURES["cut-vertex-in-core-zero"])
    assert result.witnesses == ()
    assert result.exhausted


def test_cut_vertex_witnesses_pinned():
    """Exhaustive scans put the smallest examples at nine vertices; the
    two witnesses are pinned here and rechecked from scratch."""
    sig = SIGNATURES["cut-vertex-in-core-zero"]
    for text in CUT_VERTEX_WITNESSES:
        g = parse_graph6(text)
        assert g.n == MIN_ORDER_CUT_VERTEX_CORE_ZERO
        assert evaluate_signature(sig, g)
        masks = classification_masks(g)
        hits = masks["core"] & masks["zero"] & cut_vertices(g)
        assert hits != 0


def test_every_class_witness_pinned():
    sig = SIGNATURES["min-plus-zero-minus-empty-anticore"]
    g = parse_graph6(EVERY_CLASS_WITNESS)
    assert g.n == 9
    assert evaluate_signature(sig, g)
    masks = classification_masks(g)
    assert masks["anticore"] == 0
    sizes = (
        masks["plus"].bit_count(),
        masks["zero"].bit_count(),
        masks["minus"].bit_count(),
    )
    assert sizes == (1, 4, 4)


def test_stop_at_first_order_vs_full():
    short = search_signature(8, SIGNATURES["one-plus-rest-zero-nonempty-core-zero"])
    assert short.scans[-1].n == 6
    full = search_signature(
        7,
        SIGNATURES["one-plus-rest-zero-nonempty-core-zero"],
        stop_at_first_order=False,
    )
    assert [s.n for s in full.scans] == list(range(1, 8))
    assert sum(s.witness_count for s in full.scans) >= 1


def test_budget_cap():
    result = search_signature(
        7, SIGNATURES["all-zero-nonempty-core"], max_graphs=20
    )
    assert result.budget_exceeded
    assert not result.exhausted
    assert sum(s.graphs_scanned for s in result.scans) == 20


def test_jobs_do_not_change_results():
    seq = search_signature(6, SIGNATURES["cover-core-zero-anticore"], jobs=1)
    par = search_signature(6, SIGNATURES["cover-core-zero-anticore"], jobs=2)
    assert seq.to_dict() == par.to_dict()


def test_has_k4_and_filters():
    assert has_k4(complete(4))
    assert has_k4(complete(6))
    assert not has_k4(complete_bipartite(3, 3))
    assert not has_k4(cycle(9))
    assert line_graph_family_filter(cycle(6))
    assert not line_graph_family_filter(star(3))
    assert not line_graph_family_filter(complete(4))
    assert cubic_bipartite_filter(complete_bipartite(3, 3))
    assert not cubic_bipartite_filter(cycle(6))
    assert not cubic_bipartite_filter(complete(4))


def test_search_bounds():
    with pytest.raises(GraphError):
        search_signature(SEARCH_MAX + 1, SIGNATURES["all-zero-nonempty-core"])
    with pytest.raises(GraphError):
        search_signature(5, SIGNATURES["all-zero-nonempty-core"], class_filter=42)


def test_witness_file_roundtrip(tmp_path):
    result = search_signature(6, SIGNATURES["one-plus-rest-zero-nonempty-core-zero"])
    path_ = write_witness_file(result, str(tmp_path))
    lines = [
        line
        for line in open(path_).read().splitlines()
        if line and not line.startswith("#")
    ]
    assert lines == ["Er_G"]
    for line in lines:
        parse_graph6(line)


def test_witness_directory_env(monkeypatch):
    monkeypatch.delenv("DOMCORE_WITNESS_DIR", raising=False)
    assert witness_directory() == "witnesses"
    monkeypatch.setenv("DOMCORE_WITNESS_DIR", "/tmp/elsewhere")
    assert witness_directory() == "/tmp/elsewhere"
