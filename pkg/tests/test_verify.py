import pytest

from domcore import GraphError, verify_corpus
from domcore.verify import PER_GRAPH_CHECKS, VERIFY_MAX


def test_small_corpus_passes():
    report = verify_corpus(5)
    assert report.all_pass
    assert report.graphs_total == 31
    for check in report.checks:
        assert check.passed
        assert check.violations == ()


def test_check_names_unique():
    names = [name for name, _, _ in PER_GRAPH_CHECKS]
    assert len(names) == len(set(names))


def test_report_dict_shape():
    d = verify_corpus(3).to_dict()
    assert list(d) == ["n_max", "graphs_total", "all_pass", "checks"]
    assert d["n_max"] == 3
    assert d["graphs_total"] == 4
    assert d["all_pass"] is True
    first = d["checks"][0]
    assert list(first) == ["name", "graphs_checked", "violations", "examples"]


def test_caps_respected():
    report = verify_corpus(5)
    by_name = {c.name: c for c in report.checks}
    # per-graph checks saw every graph at this size
    assert by_name["solver-oracle-equivalence"].graphs_checked == 31
    assert by_name["removal-raises-characterization"].graphs_checked == 31


def test_bounds():
    with pytest.raises(GraphError):
        verify_corpus(0)
    with pytest.raises(GraphError):
        verify_corpus(VERIFY_MAX + 1)


def test_jobs_identical():
    assert verify_corpus(5, jobs=2).to_dict() == verify_corpus(5).to_dict()
