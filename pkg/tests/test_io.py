"""Serialization: JSON quiver documents, sequence documents, DOT export."""

import json

import pytest

from quivercycles import UsageError, make_quiver
from quivercycles.io import (
    parse_steps_text,
    quiver_from_doc,
    quiver_from_json,
    quiver_to_doc,
    quiver_to_json,
    sequence_from_doc,
    sequence_to_doc,
    quiver_to_dot,
)


def test_writer_emits_decimal_strings():
    q = make_quiver(3, {(1, 2): 2**100, (2, 3): -5})
    doc = quiver_to_doc(q)
    assert doc["n"] == 3
    assert doc["b"][0][1] == str(2**100)
    assert all(isinstance(x, str) for row in doc["b"] for x in row)


def test_roundtrip_preserves_big_integers():
    q = make_quiver(4, {(1, 2): 3**200, (3, 4): -(7**150)})
    assert quiver_from_json(quiver_to_json(q)) == q


def test_reader_accepts_plain_integers():
    doc = {"n": 2, "b": [[0, 4], [-4, 0]]}
    q = quiver_from_doc(doc)
    assert q.b(1, 2) == 4


def test_reader_rejects_malformed_documents():
    with pytest.raises(UsageError):
        quiver_from_json("not json")
    with pytest.raises(UsageError):
        quiver_from_doc({"n": 2, "b": [[0, 1]]})
    with pytest.raises(UsageError):
        quiver_from_doc({"n": 2, "b": [[0, "x"], ["-x", 0]]})
    with pytest.raises(UsageError):
        quiver_from_doc({"n": 2, "b": [[0, 1.5], [-1.5, 0]]})


def test_sequence_documents_are_application_order():
    doc = sequence_to_doc((4, 1, 2))
    assert doc == {"order": "application", "steps": [4, 1, 2]}
    assert sequence_from_doc(doc) == (4, 1, 2)
    with pytest.raises(UsageError):
        sequence_from_doc({"order": "bracket", "steps": [1, 2]})


def test_parse_steps_text():
    assert parse_steps_text("4,1,2,3") == (4, 1, 2, 3)
    assert parse_steps_text("4 1 2") == (4, 1, 2)
    with pytest.raises(UsageError):
        parse_steps_text("a,b")


def test_dot_export_directions_and_labels():
    q = make_quiver(3, {(1, 2): 2, (1, 3): -7})
    dot = quiver_to_dot(q)
    assert '1 -> 2 [label="2"];' in dot
    assert '3 -> 1 [label="7"];' in dot
    assert "2 -> 3" not in dot and "3 -> 2" not in dot
    json.dumps(dot)  # plain text, embeddable
