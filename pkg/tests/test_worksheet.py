"""Worksheet model invariants and structured validation."""

from __future__ import annotations

import pytest

from fmeakit import (
    ClassLabel,
    FmeaEntry,
    RatingTriple,
    Worksheet,
    validate_entry,
    validate_worksheet,
)


def entry(component="Pump", failure_mode="Seal leak", s=5, o=5, d=5, **kwargs):
    return FmeaEntry(component, failure_mode, RatingTriple(s, o, d), **kwargs)


def test_class_label_from_text_case_insensitive():
    assert ClassLabel.from_text("catastrophic") is ClassLabel.CATASTROPHIC
    assert ClassLabel.from_text("  MARGINAL ") is ClassLabel.MARGINAL
    assert ClassLabel.from_text("Negligible") is ClassLabel.NEGLIGIBLE
    with pytest.raises(ValueError):
        ClassLabel.from_text("severe")


def test_class_label_values_render_as_written():
    assert [label.value for label in ClassLabel] == [
        "Catastrophic", "Critical", "Marginal", "Negligible"]


def test_worksheet_is_immutable_and_sized():
    ws = Worksheet("demo", [entry(), entry(failure_mode="Bearing wear")])
    assert len(ws) == 2
    assert isinstance(ws.entries, tuple)
    with pytest.raises(AttributeError):
        ws.title = "other"


def test_empty_worksheet_is_valid():
    assert validate_worksheet(Worksheet("empty")) == []


def test_valid_entry_has_no_violations():
    assert validate_entry(entry()) == []


def test_blank_component_is_a_violation():
    violations = validate_entry(entry(component="   "))
    assert [v.field for v in violations] == ["component"]


def test_out_of_range_ratings_are_violations():
    violations = validate_entry(entry(s=0, o=11, d=5))
    assert sorted(v.field for v in violations) == ["occurrence", "severity"]
    assert all("[1, 10]" in v.message for v in violations)


def test_non_integer_ratings_are_violations():
    violations = validate_entry(entry(s=True, o=5.0, d="7"))
    assert sorted(v.field for v in violations) == [
        "detection", "occurrence", "severity"]


def test_worksheet_violations_carry_entry_index():
    ws = Worksheet("demo", [entry(), entry(failure_mode="Other", s=99)])
    violations = validate_worksheet(ws)
    assert len(violations) == 1
    assert violations[0].entry_index == 1
    assert violations[0].field == "severity"
    assert str(violations[0]).startswith("entry 1: severity:")


def test_duplicate_pairs_reported_once_with_all_indices():
    ws = Worksheet("demo", [entry(), entry(s=7), entry(failure_mode="Other"),
                            entry(d=2)])
    violations = validate_worksheet(ws)
    assert len(violations) == 1
    v = violations[0]
    assert v.field == "component, failure_mode"
    assert "0, 1, 3" in v.message


def test_distinct_failure_modes_on_one_component_are_fine():
    ws = Worksheet("demo", [entry(), entry(failure_mode="Bearing wear")])
    assert validate_worksheet(ws) == []
