from __future__ import annotations

import pytest

from polarvote import (
    DEFAULT_SCHEMA,
    BadSpec,
    LabelSchema,
    UnknownLabel,
    load_schema,
    parse_label,
    parse_labels,
    write_schema,
)


def test_default_schema_order():
    assert DEFAULT_SCHEMA.labels == ("Negative", "Neutral", "Positive")
    assert DEFAULT_SCHEMA.count == 3


def test_parse_label_exact_positions():
    assert parse_label("Positive", DEFAULT_SCHEMA) == 2
    assert parse_label("Neutral", DEFAULT_SCHEMA) == 1
    assert parse_label("Negative", DEFAULT_SCHEMA) == 0


def test_parse_label_trims_and_casefolds():
    assert parse_label("negative ", DEFAULT_SCHEMA) == 0
    assert parse_label("  POSITIVE", DEFAULT_SCHEMA) == 2
    assert parse_label("\tneutral\t", DEFAULT_SCHEMA) == 1


def test_parse_label_no_fuzzy_matching():
    with pytest.raises(UnknownLabel):
        parse_label("Pos", DEFAULT_SCHEMA)
    with pytest.raises(UnknownLabel):
        parse_label("", DEFAULT_SCHEMA)


def test_round_trip_via_label_of():
    for label_id in range(DEFAULT_SCHEMA.count):
        name = DEFAULT_SCHEMA.label_of(label_id)
        assert parse_label(name, DEFAULT_SCHEMA) == label_id


def test_parse_labels_list():
    assert parse_labels(["Positive", "negative"], DEFAULT_SCHEMA) == [2, 0]


def test_schema_rejects_duplicates_and_empties():
    with pytest.raises(BadSpec):
        LabelSchema(("A", "a"))  # case-insensitive collision
    with pytest.raises(BadSpec):
        LabelSchema(("A", ""))
    with pytest.raises(BadSpec):
        LabelSchema(("OnlyOne",))


def test_custom_schema_order_is_significant():
    schema = LabelSchema(("Positive", "Negative"))
    assert parse_label("Positive", schema) == 0
    assert parse_label("Negative", schema) == 1


def test_schema_file_round_trip(tmp_path):
    path = tmp_path / "labels.txt"
    write_schema(DEFAULT_SCHEMA, path)
    loaded = load_schema(path)
    assert loaded.labels == DEFAULT_SCHEMA.labels


def test_schema_file_skips_blank_lines(tmp_path):
    path = tmp_path / "labels.txt"
    path.write_text("Negative\n\nNeutral\nPositive\n", encoding="utf-8")
    assert load_schema(path).labels == ("Negative", "Neutral", "Positive")
