"""Tests for text and JSON reports."""

import json

from src.classify import CanonicalForm, classify
from src.cli import CheckResult
from src.decompose import decompose
from src.reporting import JsonReport, TextReport


def test_json_lines_are_sorted():
    """Test one sorted JSON object per record."""
    lines = JsonReport({}).render([{"b": 1, "a": [2]}, {"c": None}])
    assert lines == ['{"a": [2], "b": 1}', '{"c": null}']
    assert json.loads(lines[1]) == {"c": None}


def test_classify_report(quaternion):
    """Test the classification summary."""
    lines = TextReport({}).classify(classify(quaternion))
    assert lines[0] == "G2(p=2; m=1)"
    assert "  complement: trivial" in lines
    assert lines[-1] == "}"


def test_decompose_report(make_canonical):
    """Test the decomposition summary."""
    lines = TextReport({}).decompose(decompose(make_canonical(1, 2, 1, torsion=(3,))))
    assert lines[0] == "D:"
    assert any(line.startswith("A: ") and line.endswith(":3") for line in lines)


def test_isomorphic_report():
    """Test both isomorphism verdicts."""
    g3 = CanonicalForm(family=3, p=3, m=(1, 1))
    g4 = CanonicalForm(family=4, p=3, m=(1, 1))
    report = TextReport({})
    assert report.isomorphic(g3, g3, None) == ["isomorphic: G3(p=3; m=1,1)"]
    lines = report.isomorphic(g3, g4, "non-central order-p element count differs")
    assert lines[0] == "not isomorphic: non-central order-p element count differs"


def test_validate_report(dihedral):
    """Test valid and invalid summaries."""
    report = TextReport({})
    assert report.validate(dihedral, []) == ["valid: order 8, center t1:2"]
    lines = report.validate(None, ["TrivialCommutator: comm is the identity"])
    assert lines == ["invalid (1 violation):", "  - TrivialCommutator: comm is the identity"]


def test_enumerate_report():
    """Test the enumeration listing."""
    forms = [CanonicalForm(family=1, p=2, m=(1,)), CanonicalForm(family=2, p=2, m=(1,))]
    assert TextReport({}).enumerate(forms) == ["G1(p=2; m=1)", "G2(p=2; m=1)", "2 instances"]


def test_check_report():
    """Test check statuses and the tally."""
    results = [CheckResult("replay", "pass", "3 steps"), CheckResult("latin_square", "skip")]
    lines = TextReport({}).check(results)
    assert lines[0] == "[PASS] replay: 3 steps"
    assert lines[1] == "[SKIP] latin_square"
    assert lines[-1] == "1 passed, 0 failed, 1 skipped"
