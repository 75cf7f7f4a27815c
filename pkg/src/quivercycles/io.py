"""JSON documents and DOT export for quivers and mutation sequences.

Weights cross every serialization boundary as decimal strings so that
arbitrary-precision values survive JSON consumers without 64-bit
integers.  The reader also accepts plain integers.  Sequence documents
carry an explicit "order" field: steps are listed in application order
(first-applied first).
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .errors import UsageError
from .quiver import Quiver

SEQUENCE_ORDER = "application"


def quiver_to_doc(q: Quiver) -> dict:
    return {"n": q.n, "b": [[str(x) for x in row] for row in q.rows]}


def _parse_entry(value: Any) -> int:
    if isinstance(value, bool):
        raise UsageError("matrix entry %r is not an integer" % (value,))
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise UsageError("matrix entry %r is not a decimal integer" % (value,))
    raise UsageError("matrix entry %r is not an integer" % (value,))


def quiver_from_doc(doc: Any) -> Quiver:
    if not isinstance(doc, dict):
        raise UsageError("quiver document must be a JSON object")
    try:
        n = doc["n"]
        b = doc["b"]
    except (KeyError, TypeError):
        raise UsageError('quiver document needs "n" and "b" fields')
    if not isinstance(n, int) or not isinstance(b, list) or len(b) != n:
        raise UsageError("quiver document has inconsistent dimensions")
    rows = []
    for row in b:
        if not isinstance(row, list) or len(row) != n:
            raise UsageError("quiver document has inconsistent dimensions")
        rows.append([_parse_entry(x) for x in row])
    return Quiver(rows)


def quiver_to_json(q: Quiver, indent: int | None = None) -> str:
    return json.dumps(quiver_to_doc(q), indent=indent)


def quiver_from_json(text: str) -> Quiver:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("malformed quiver JSON: %s" % exc)
    return quiver_from_doc(doc)


def sequence_to_doc(steps: Sequence[int]) -> dict:
    return {"order": SEQUENCE_ORDER, "steps": [int(s) for s in steps]}


def sequence_from_doc(doc: Any) -> tuple:
    if not isinstance(doc, dict) or "steps" not in doc:
        raise UsageError('sequence document needs a "steps" field')
    order = doc.get("order", SEQUENCE_ORDER)
    if order != SEQUENCE_ORDER:
        raise UsageError(
            'sequence order %r not supported; steps must be given in "%s" order'
            % (order, SEQUENCE_ORDER)
        )
    steps = doc["steps"]
    if not isinstance(steps, list):
        raise UsageError("sequence steps must be a list")
    return tuple(_parse_entry(s) for s in steps)


def parse_steps_text(text: str) -> tuple:
    """Parse a comma- or space-separated vertex list like "4,1,2,3"."""
    items = [t for chunk in text.split(",") for t in chunk.split()]
    if not items:
        raise UsageError("empty mutation sequence")
    try:
        return tuple(int(t) for t in items)
    except ValueError:
        raise UsageError("mutation sequence %r is not a list of integers" % text)


def quiver_to_dot(q: Quiver, name: str = "quiver") -> str:
    """DOT digraph: one node per vertex, one edge per pair in arrow direction."""
    lines = ["digraph %s {" % name]
    for v in q.vertices():
        lines.append('  %d [label="%d"];' % (v, v))
    for i in range(1, q.n + 1):
        for j in range(i + 1, q.n + 1):
            w = q.b(i, j)
            if w > 0:
                lines.append('  %d -> %d [label="%d"];' % (i, j, w))
            elif w < 0:
                lines.append('  %d -> %d [label="%d"];' % (j, i, -w))
    lines.append("}")
    return "\n".join(lines) + "\n"
