"""Tests for the presentation DSL, the JSON document and validation."""

import json
import random

import pytest

from src.abelian import CentralVector, FgAbelian
from src.errors import PresentationSyntaxError, PresentationValidationError
from src.presentation import (
    GroupPresentation,
    ViolationKind,
    emit,
    from_json,
    load_presentation,
    parse,
    to_json,
    validate,
)


def _kinds(text):
    with pytest.raises(PresentationValidationError) as info:
        parse(text)
    return {v.kind for v in info.value.violations}


def test_parse_dihedral(dihedral):
    """Test parsing the dihedral group of order 8."""
    assert dihedral.p == 2
    assert dihedral.order() == 8
    assert dihedral.s == CentralVector.of(t1=1)
    assert dihedral.xp.is_zero and dihedral.yp.is_zero


def test_parse_reduces_exponents():
    """Test that exponents are reduced modulo factor orders."""
    pres = parse("group { prime 2; center t1:4; comm t1^2; xp t1^5; yp t1^-1 }")
    assert pres.xp == CentralVector.of(t1=1)
    assert pres.yp == CentralVector.of(t1=3)


def test_parse_with_comments_and_infinite_factor():
    """Test comments, free factors and the infinite order."""
    text = """
    # Heisenberg core with a free factor
    group {
        prime 3;
        center t1:3, u:inf;
        comm t1;
        xp u;
        yp 1;
    }
    """
    pres = parse(text)
    assert pres.order() is None
    assert pres.center.free_rank == 1
    assert pres.xp == CentralVector.of(u=1)


def test_order_one_factor_is_dropped():
    """Test that trivial factors disappear together with their exponents."""
    pres = parse("group { prime 2; center t1:2, e:1; comm t1; xp e; yp 1 }")
    assert pres.center.names == ("t1",)
    assert pres.xp.is_zero


def test_missing_statement():
    """Test a presentation without its yp statement."""
    with pytest.raises(PresentationSyntaxError, match="Missing 'yp'"):
        parse("group { prime 2; center t1:2; comm t1; xp 1 }")


def test_duplicate_statement():
    """Test a repeated statement."""
    with pytest.raises(PresentationSyntaxError, match="Duplicate 'xp'"):
        parse("group { prime 2; center t1:2; comm t1; xp 1; xp 1; yp 1 }")


def test_syntax_error_has_location():
    """Test that grammar errors report a line."""
    with pytest.raises(PresentationSyntaxError) as info:
        parse("group {\n  prime 2;\n  center t1:2;\n  comm ?;\n  xp 1;\n  yp 1\n}")
    assert info.value.line == 4


def test_non_prime_p():
    """Test a composite p."""
    assert ViolationKind.NON_PRIME_P in _kinds(
        "group { prime 4; center t1:4; comm t1; xp 1; yp 1 }"
    )


def test_trivial_commutator():
    """Test an abelian presentation."""
    assert _kinds("group { prime 2; center t1:2; comm 1; xp 1; yp 1 }") == {
        ViolationKind.TRIVIAL_COMMUTATOR
    }


def test_commutator_order_not_p():
    """Test a commutator of order 9 for p = 3."""
    assert _kinds("group { prime 3; center t1:9; comm t1; xp 1; yp 1 }") == {
        ViolationKind.COMMUTATOR_ORDER_NOT_P
    }


def test_free_commutator():
    """Test a commutator of infinite order."""
    assert _kinds("group { prime 2; center u:inf; comm u; xp 1; yp 1 }") == {
        ViolationKind.COMMUTATOR_ORDER_NOT_P
    }


def test_unknown_factor():
    """Test a relation using an undeclared factor."""
    assert ViolationKind.UNKNOWN_FACTOR_NAME in _kinds(
        "group { prime 2; center t1:2; comm t1; xp w; yp 1 }"
    )


def test_validate_reports_unreduced_exponent():
    """Test that validate flags exponents outside the factor range."""
    pres = GroupPresentation(
        2,
        FgAbelian.of([("t1", 2)]),
        CentralVector.of(t1=1),
        CentralVector.of(t1=3),
        CentralVector.zero(),
    )
    assert [v.kind for v in validate(pres)] == [ViolationKind.UNREDUCED_EXPONENT]


def test_emit_dsl_parses_back(make_canonical):
    """Test that emitted DSL describes the same presentation."""
    pres = make_canonical(8, 3, 2, 1, torsion=(5,), free_rank=1)
    assert parse(emit(pres)) == pres


def test_random_presentations_survive_emit_and_parse(make_random):
    """Test DSL and JSON round trips over 500 seeded presentations with mixed centers."""
    rng = random.Random(500)
    for _ in range(500):
        pres = make_random(rng, rng.choice((2, 3, 5)), free_rank=rng.randint(0, 2))
        assert parse(emit(pres)) == pres
        assert from_json(emit(pres, "json")) == pres


def test_json_document(quaternion):
    """Test the JSON document layout and its round trip."""
    text = emit(quaternion, "json")
    document = json.loads(text)
    assert document["p"] == 2
    assert document["center"] == [{"name": "t1", "order": 2}]
    assert document["xp"] == {"t1": 1}
    assert from_json(text) == quaternion
    assert to_json(from_json(text)) == text


def test_json_schema_error():
    """Test a JSON document missing a field."""
    with pytest.raises(PresentationSyntaxError):
        from_json('{"p": 2, "center": []}')


def test_emit_unknown_format(dihedral):
    """Test an unsupported output format."""
    with pytest.raises(ValueError):
        emit(dihedral, "yaml")


def test_load_presentation_from_file(tmp_path, quaternion):
    """Test loading DSL and JSON files as well as inline text."""
    grp = tmp_path / "q8.grp"
    grp.write_text(emit(quaternion))
    doc = tmp_path / "q8.json"
    doc.write_text(emit(quaternion, "json"))
    assert load_presentation(str(grp)) == quaternion
    assert load_presentation(str(doc)) == quaternion
    assert load_presentation(emit(quaternion)) == quaternion
