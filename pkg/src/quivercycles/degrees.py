"""Tropical degree tracking along mutation sequences.

One initial cluster variable is tracked; each mutation replaces the
degree at the mutated vertex via the max-plus image of the exchange
rule.  With large weights the newly created degree strictly exceeds
everything seen so far, which is exactly why such sequences can close
up as quivers but never as seeds.  The max-plus value is exact for the
true Laurent degrees (positivity prevents cancellation of top terms);
the weaker two-term recurrence bound is recorded alongside it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ConstraintError
from .quiver import Quiver, mutate, validate_steps


@dataclass(frozen=True)
class DegreeStep:
    vertex: int
    new_degree: int
    lower_bound: int
    exceeds_all_previous: bool


@dataclass(frozen=True)
class DegreeState:
    """Final per-vertex degrees plus the per-step creation history."""

    tracked: int
    degrees: tuple
    history: tuple

    def degree(self, v: int) -> int:
        return self.degrees[v - 1]

    def strictly_increasing(self) -> bool:
        return all(step.exceeds_all_previous for step in self.history)


def _maxplus_new_degree(q: Quiver, d: Sequence[int], v: int) -> int:
    pos = 0
    neg = 0
    for u in q.vertices():
        if u == v:
            continue
        buv = q.b(u, v)
        if buv > 0:
            pos += buv * d[u - 1]
        elif buv < 0:
            neg += (-buv) * d[u - 1]
    return max(pos, neg) - d[v - 1]


def track_degrees(q: Quiver, steps: Sequence[int], tracked: int = 1) -> DegreeState:
    """Run the max-plus degree recursion along a mutation sequence.

    Preconditions: the sequence is adjacent-distinct, does not start at
    the tracked vertex, and every quiver it passes through has large
    weights (checked on the fly).
    """
    q._check_vertex(tracked)
    steps = validate_steps(steps, q.n)
    if not steps:
        raise ConstraintError("degree tracking needs a nonempty sequence")
    if steps[0] == tracked:
        raise ConstraintError(
            "sequence must not start at the tracked vertex %d" % tracked
        )
    d = [0] * q.n
    d[tracked - 1] = 1
    history = []
    current = q
    prev_vertex = None
    for v in steps:
        if not current.has_large_weights():
            raise ConstraintError("large weights violated mid-sequence")
        new = _maxplus_new_degree(current, d, v)
        if prev_vertex is None:
            bound = abs(current.b(tracked, v))
        else:
            bound = abs(current.b(prev_vertex, v)) * d[prev_vertex - 1] - d[v - 1]
        history.append(
            DegreeStep(
                vertex=v,
                new_degree=new,
                lower_bound=bound,
                exceeds_all_previous=new > max(d),
            )
        )
        d[v - 1] = new
        current = mutate(current, v)
        prev_vertex = v
    return DegreeState(tracked=tracked, degrees=tuple(d), history=tuple(history))
