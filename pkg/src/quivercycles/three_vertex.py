"""Analysis of 3-vertex quivers in the mutation-acyclic large-weight class.

A mutation at a vertex of a 3-vertex quiver leaves two weights intact
and replaces the one opposite the mutated vertex; classifying vertices
by whether that weight strictly grows or shrinks drives everything
here: the unique-descent walk back to an acyclic quiver, and the
Chebyshev closed forms for alternating mutation walks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ConstraintError, UnsupportedClassError
from .quiver import Quiver, mutate

DESCENT_ITERATION_CAP = 10000


class VertexClass(enum.Enum):
    ASCENT = "ascent"
    DESCENT = "descent"
    NEITHER = "neither"


@dataclass(frozen=True)
class DescentSeq:
    """Steps (application order) taking a quiver to its acyclic terminal."""

    steps: tuple
    terminal: Quiver


@dataclass(frozen=True)
class ChebyshevSeq:
    """Values u_0..u_m of the monic second-kind Chebyshev recurrence at a."""

    argument: int
    values: tuple


def _require_three(q: Quiver) -> None:
    if q.n != 3:
        raise ConstraintError("expected a 3-vertex quiver, got n=%d" % q.n)


def _opposite(i: int) -> tuple:
    return tuple(v for v in (1, 2, 3) if v != i)


def elbow(q: Quiver) -> int:
    """The vertex of an acyclic 3-vertex quiver that is neither sink nor source."""
    _require_three(q)
    if any(q.b(i, j) == 0 for i in (1, 2) for j in range(i + 1, 4)):
        raise ConstraintError("elbow requires nonzero weights")
    if not q.is_acyclic():
        raise ConstraintError("elbow requires an acyclic quiver")
    for v in (1, 2, 3):
        if not q.is_sink(v) and not q.is_source(v):
            return v
    raise ConstraintError("no elbow found")  # unreachable for valid input


def classify_vertices(q: Quiver) -> dict:
    """Map each vertex to ascent/descent/neither by the opposite-weight change."""
    _require_three(q)
    result = {}
    for i in (1, 2, 3):
        j, k = _opposite(i)
        before = abs(q.b(j, k))
        after = abs(mutate(q, i).b(j, k))
        if after > before:
            result[i] = VertexClass.ASCENT
        elif after < before:
            result[i] = VertexClass.DESCENT
        else:
            result[i] = VertexClass.NEITHER
    return result


def descent_sequence(q: Quiver, cap: int = DESCENT_ITERATION_CAP) -> DescentSeq:
    """Mutate at the unique descent until acyclic.

    Only quivers mutation equivalent to an acyclic quiver with large
    weights are guaranteed to admit this walk; there is no intrinsic
    membership test, so failures (no descent while cyclic, a step that
    does not shrink a weight, or hitting the iteration cap) raise
    UnsupportedClassError without asserting non-membership.
    """
    _require_three(q)
    steps = []
    current = q
    for _ in range(cap):
        if current.is_acyclic():
            return DescentSeq(tuple(steps), current)
        if not current.has_large_weights():
            raise UnsupportedClassError(
                "not in supported class: cyclic 3-vertex quiver without large weights"
            )
        classes = classify_vertices(current)
        descents = [v for v, c in classes.items() if c is VertexClass.DESCENT]
        if len(descents) != 1:
            raise UnsupportedClassError(
                "not in supported class: cyclic quiver with %d descents" % len(descents)
            )
        v = descents[0]
        j, k = _opposite(v)
        nxt = mutate(current, v)
        if abs(nxt.b(j, k)) >= abs(current.b(j, k)):
            raise UnsupportedClassError(
                "not in supported class: descent step failed to shrink a weight"
            )
        steps.append(v)
        current = nxt
    raise UnsupportedClassError(
        "not in supported class: descent walk exceeded %d steps" % cap
    )


def chebyshev(a: int, m: int) -> ChebyshevSeq:
    """u_0..u_m with u_0 = 1, u_1 = a and u_{j+1} = a u_j - u_{j-1}."""
    if m < 0:
        raise ConstraintError("chebyshev length must be nonnegative")
    values = [1]
    if m >= 1:
        values.append(a)
    for _ in range(2, m + 1):
        values.append(a * values[-1] - values[-2])
    return ChebyshevSeq(a, tuple(values))


def chebyshev_value(a: int, j: int) -> int:
    """Single value u_j(a); u_{-1} = 0 so the closed forms below hold at j=0."""
    if j < -1:
        raise ConstraintError("chebyshev index must be >= -1")
    if j == -1:
        return 0
    return chebyshev(a, j).values[j]


def alternating_weights(a: int, b: int, c: int, j: int, parity: str) -> tuple:
    """Closed-form weights along the alternating walk from the acyclic quiver
    with b_12 = a, b_31 = b, b_32 = c (mutations 1, 2, 1, 2, ... from vertex 1).

    parity "even" gives step 2j+2 as the triple (b_21, b_13, b_32);
    parity "odd" gives step 2j+1 (j >= 1) as (b_12, b_23, b_31).
    """
    if parity == "even":
        if j < 0:
            raise ConstraintError("even closed form needs j >= 0")
        return (
            a,
            chebyshev_value(a, 2 * j) * b + chebyshev_value(a, 2 * j - 1) * c,
            chebyshev_value(a, 2 * j + 1) * b + chebyshev_value(a, 2 * j) * c,
        )
    if parity == "odd":
        if j < 1:
            raise ConstraintError("odd closed form needs j >= 1")
        return (
            a,
            chebyshev_value(a, 2 * j - 1) * b + chebyshev_value(a, 2 * j - 2) * c,
            chebyshev_value(a, 2 * j) * b + chebyshev_value(a, 2 * j - 1) * c,
        )
    raise ConstraintError("parity must be 'even' or 'odd'")


def alternating_base(a: int, b: int, c: int) -> Quiver:
    """The acyclic starting quiver of the alternating walk: 1->2 (a), 3->1 (b), 3->2 (c)."""
    from .quiver import make_quiver

    return make_quiver(3, {(1, 2): a, (1, 3): -b, (2, 3): -c})
