"""Vortices, global descents, exit certificates, and their propagation.

The exit certificate is one-sided: the three conditions checked by
certify_exit are sufficient for "mutating here never returns", so the
report vocabulary is {certified, unknown} and never "not an exit".
All of these predicates assume large weights and fail fast otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ConstraintError
from .quiver import Quiver, mutate, restrict, validate_steps
from .three_vertex import VertexClass, classify_vertices

CERTIFIED = "certified"
UNKNOWN = "unknown"


def cyclic_triples(q: Quiver) -> list:
    """Label triples whose full subquiver contains an oriented triangle."""
    return [
        triple
        for triple in itertools.combinations(q.vertices(), 3)
        if not restrict(q, triple).is_acyclic()
    ]


def find_vortices(q: Quiver) -> list:
    """All 4-vertex subquivers that are vortices, as (vertices, apex) pairs.

    A vortex has nonzero weights, a unique sink-or-source (the apex),
    and an oriented triangle on the other three vertices.
    """
    found = []
    for quad in itertools.combinations(q.vertices(), 4):
        sub = restrict(q, quad)
        if any(
            sub.b(i, j) == 0 for i in range(1, 5) for j in range(i + 1, 5)
        ):
            continue
        for pos, v in enumerate(quad):
            local = pos + 1
            if not (sub.is_sink(local) or sub.is_source(local)):
                continue
            rest = [w for w in range(1, 5) if w != local]
            if not restrict(sub, rest).is_acyclic():
                found.append((quad, v))
    return found


def is_vortex_free(q: Quiver) -> bool:
    return not find_vortices(q)


def global_descent(q: Quiver) -> Optional[int]:
    """The vertex that is a descent of every cyclic 3-vertex subquiver, if any.

    None when the quiver is acyclic (no cyclic subquiver exists) or when
    no single vertex works.  Unique under large weights.
    """
    triples = cyclic_triples(q)
    if not triples:
        return None
    candidates = set(triples[0])
    for triple in triples[1:]:
        candidates &= set(triple)
        if not candidates:
            return None
    for v in sorted(candidates):
        if all(_is_descent_in_triple(q, triple, v) for triple in triples):
            return v
    return None


def _is_descent_in_triple(q: Quiver, triple: tuple, v: int) -> bool:
    sub = restrict(q, triple)
    local = triple.index(v) + 1
    return classify_vertices(sub)[local] is VertexClass.DESCENT


def _is_ascent_in_triple(q: Quiver, triple: tuple, v: int) -> bool:
    sub = restrict(q, triple)
    local = triple.index(v) + 1
    return classify_vertices(sub)[local] is VertexClass.ASCENT


@dataclass(frozen=True)
class ConditionReport:
    """The five single-vertex conditions; the first two imply the last three."""

    global_descent_elsewhere: bool  # some vertex != i is a global descent
    vortex_free: bool
    ascent_in_all_cyclic_triples: bool
    not_sink_source: bool
    not_vortex_apex: bool

    def strong(self) -> bool:
        return self.global_descent_elsewhere and self.vortex_free

    def weak(self) -> bool:
        return (
            self.ascent_in_all_cyclic_triples
            and self.not_sink_source
            and self.not_vortex_apex
        )


def _require_large_weights(q: Quiver, what: str) -> None:
    if not q.has_large_weights():
        raise ConstraintError("%s requires large weights" % what)


def check_conditions(q: Quiver, i: int) -> ConditionReport:
    q._check_vertex(i)
    _require_large_weights(q, "condition check")
    gd = global_descent(q)
    vortices = find_vortices(q)
    triples_with_i = [t for t in cyclic_triples(q) if i in t]
    return ConditionReport(
        global_descent_elsewhere=(gd is not None and gd != i),
        vortex_free=(not vortices),
        ascent_in_all_cyclic_triples=all(
            _is_ascent_in_triple(q, t, i) for t in triples_with_i
        ),
        not_sink_source=not (q.is_sink(i) or q.is_source(i)),
        not_vortex_apex=all(apex != i for _, apex in vortices),
    )


def certify_exit(q: Quiver, i: int) -> str:
    """"certified" when the sufficient conditions hold, else "unknown"."""
    report = check_conditions(q, i)
    return CERTIFIED if report.weak() else UNKNOWN


@dataclass(frozen=True)
class PropagationStep:
    vertex: int
    global_descent_at_previous: bool
    vortex_free: bool
    weights_nondecreasing: bool
    some_weight_increased: bool
    arrow_count: int

    def ok(self) -> bool:
        return (
            self.global_descent_at_previous
            and self.vortex_free
            and self.weights_nondecreasing
            and self.some_weight_increased
        )


@dataclass(frozen=True)
class PropagationTrace:
    start: Quiver
    steps: tuple
    final: Quiver
    returned_to_start: bool

    def all_ok(self) -> bool:
        return not self.returned_to_start and all(step.ok() for step in self.steps)


def propagate(q: Quiver, i: int, walk: Sequence[int]) -> PropagationTrace:
    """Walk away from a certified vertex, checking the propagating facts.

    Requires (q, i) to satisfy the exit conditions and the walk to start
    with i with adjacent entries distinct.  After each step the quiver
    must carry a global descent at the vertex just mutated, stay
    vortex-free, and grow: no weight shrinks and at least one strictly
    increases (so the total arrow count rises and q cannot recur).
    """
    walk = validate_steps(walk, q.n)
    if walk and walk[0] != i:
        raise ConstraintError("walk must start with the certified vertex %d" % i)
    if certify_exit(q, i) != CERTIFIED:
        raise ConstraintError(
            "vertex %d does not satisfy the exit conditions" % i
        )
    steps = []
    current = q
    returned = False
    for v in walk:
        nxt = mutate(current, v)
        grew = [
            (abs(nxt.rows[a][b]), abs(current.rows[a][b]))
            for a in range(q.n)
            for b in range(a + 1, q.n)
        ]
        steps.append(
            PropagationStep(
                vertex=v,
                global_descent_at_previous=(global_descent(nxt) == v),
                vortex_free=is_vortex_free(nxt),
                weights_nondecreasing=all(after >= before for after, before in grew),
                some_weight_increased=any(after > before for after, before in grew),
                arrow_count=nxt.arrow_count(),
            )
        )
        current = nxt
        if current == q:
            returned = True
    return PropagationTrace(
        start=q, steps=tuple(steps), final=current, returned_to_start=returned
    )


def orientation_determinism(
    q1: Quiver, q2: Quiver, walk: Sequence[int], certified_at: Optional[int] = None
) -> bool:
    """Do two same-orientation quivers keep matching orientations along a walk?

    Both quivers must have large weights and equal sign matrices, and
    either both are acyclic (any walk) or both satisfy the exit
    conditions at the walk's first vertex.
    """
    if q1.n != q2.n:
        raise ConstraintError("quivers must share a vertex set")
    _require_large_weights(q1, "orientation determinism")
    _require_large_weights(q2, "orientation determinism")
    if q1.orientation_signature() != q2.orientation_signature():
        raise ConstraintError("quivers must have equal orientation signatures")
    walk = validate_steps(walk, q1.n)
    if certified_at is not None:
        if not walk or walk[0] != certified_at:
            raise ConstraintError("walk must start at the certified vertex")
        if (
            certify_exit(q1, certified_at) != CERTIFIED
            or certify_exit(q2, certified_at) != CERTIFIED
        ):
            raise ConstraintError("both quivers must satisfy the exit conditions")
    else:
        if not (q1.is_acyclic() and q2.is_acyclic()):
            raise ConstraintError(
                "without a certified vertex both quivers must be acyclic"
            )
    a, b = q1, q2
    for v in walk:
        a, b = mutate(a, v), mutate(b, v)
        if a.orientation_signature() != b.orientation_signature():
            return False
    return True


@dataclass(frozen=True)
class StructureReport:
    """Everything the analyzer can certify about one quiver."""

    n: int
    large_weights: bool
    sinks: tuple
    sources: tuple
    vortices: tuple  # ((vertices, apex), ...)
    global_descent: Optional[int]
    exit_status: dict  # vertex -> "certified" | "unknown"

    def to_doc(self) -> dict:
        return {
            "n": self.n,
            "large_weights": self.large_weights,
            "sinks": list(self.sinks),
            "sources": list(self.sources),
            "vortices": [
                {"vertices": list(vs), "apex": apex} for vs, apex in self.vortices
            ],
            "global_descent": self.global_descent,
            "exits": {str(v): status for v, status in self.exit_status.items()},
        }


def analyze(q: Quiver) -> StructureReport:
    """Full structural report; exit certification needs large weights and
    degrades to "unknown" everywhere without them."""
    large = q.has_large_weights()
    exit_status = {}
    for v in q.vertices():
        exit_status[v] = certify_exit(q, v) if large else UNKNOWN
    return StructureReport(
        n=q.n,
        large_weights=large,
        sinks=tuple(q.sinks()),
        sources=tuple(q.sources()),
        vortices=tuple(find_vortices(q)),
        global_descent=global_descent(q),
        exit_status=exit_status,
    )
