"""Cycle verification: traces, distinctness, short-cycle exclusion.

verify_cycle replays a declared cycle mutation by mutation and records
the full list of intermediate quivers with per-step metadata; failure
to close is reported in the trace, never thrown.  The distinctness
checks and the bounded walk search consume such traces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ConstraintError, UsageError
from .factory import CycleSpec, theorem_sequence
from .quiver import Quiver, iso_upto_reversal, mutate, restrict, validate_steps

SHORT_CYCLE_NODE_BUDGET = 10**6


@dataclass(frozen=True)
class StepInfo:
    vertex: int
    sink_mutation: bool
    source_mutation: bool
    weights_nondecreasing: bool


@dataclass(frozen=True)
class CycleTrace:
    """Quivers Q^(0..N) along a walk, with per-step flags.

    ``quivers`` holds all N+1 states when retained (quivers[j] is the
    state after j mutations); in streaming mode only the first and last
    survive and ``quivers`` is None.
    """

    spec: CycleSpec
    closed: bool
    steps: tuple
    quivers: Optional[tuple]
    final: Quiver

    @property
    def length(self) -> int:
        return len(self.steps)

    def quiver_at(self, j: int) -> Quiver:
        if self.quivers is not None:
            return self.quivers[j]
        if j == 0:
            return self.spec.base
        if j == self.length:
            return self.final
        raise ConstraintError("trace was not retained; only endpoints available")


@dataclass(frozen=True)
class DistinctnessReport:
    """Pairs (i, j), i < j, of equal or iso-related quivers along a cycle."""

    equal_pairs: tuple = ()
    iso_pairs: tuple = ()

    @property
    def minimal(self) -> bool:
        return not self.equal_pairs


def verify_cycle(spec: CycleSpec, retain: str = "all") -> CycleTrace:
    """Replay the spec's sequence from its base quiver.

    Raises on malformed sequences (consecutive repeats, range errors)
    and on mutation at an isolated vertex; non-closure only flips the
    ``closed`` flag.
    """
    if retain not in ("all", "ends"):
        raise UsageError("retain must be 'all' or 'ends'")
    steps = validate_steps(spec.steps, spec.base.n)
    if not steps:
        raise UsageError("empty mutation sequence")
    current = spec.base
    quivers = [current] if retain == "all" else None
    infos = []
    for v in steps:
        if current.is_isolated(v):
            raise ConstraintError("mutation at isolated vertex %d" % v)
        nxt = mutate(current, v)
        infos.append(
            StepInfo(
                vertex=v,
                sink_mutation=current.is_sink(v),
                source_mutation=current.is_source(v),
                weights_nondecreasing=_weights_nondecreasing(current, nxt),
            )
        )
        current = nxt
        if quivers is not None:
            quivers.append(current)
    return CycleTrace(
        spec=spec,
        closed=(current == spec.base),
        steps=tuple(infos),
        quivers=tuple(quivers) if quivers is not None else None,
        final=current,
    )


def _weights_nondecreasing(before: Quiver, after: Quiver) -> bool:
    return all(
        abs(after.rows[i][j]) >= abs(before.rows[i][j])
        for i in range(before.n)
        for j in range(i + 1, before.n)
    )


def _cycle_quivers(trace: CycleTrace) -> list:
    if not trace.closed:
        raise ConstraintError("distinctness checks need a closed trace")
    if trace.quivers is None:
        raise ConstraintError("distinctness checks need a retained trace")
    return list(trace.quivers[: trace.length])


def check_minimal(trace: CycleTrace) -> DistinctnessReport:
    """Exact labeled equality over all pairs on the cycle."""
    quivers = _cycle_quivers(trace)
    buckets = {}
    for idx, q in enumerate(quivers):
        buckets.setdefault(q, []).append(idx)
    equal = []
    for indices in buckets.values():
        for a in range(len(indices)):
            for b in range(a + 1, len(indices)):
                equal.append((indices[a], indices[b]))
    return DistinctnessReport(equal_pairs=tuple(sorted(equal)))


def check_distinct_upto_iso(trace: CycleTrace) -> DistinctnessReport:
    """Pairwise isomorphism-with-optional-reversal search, with witnesses.

    Each reported entry is (i, j, sigma, reversed_flag) meaning the i-th
    quiver, optionally reversed, relabels onto the j-th.
    """
    quivers = _cycle_quivers(trace)
    found = []
    for i in range(len(quivers)):
        for j in range(i + 1, len(quivers)):
            witness = iso_upto_reversal(quivers[i], quivers[j])
            if witness is not None:
                found.append((i, j, witness[0], witness[1]))
    report = check_minimal(trace)
    return DistinctnessReport(equal_pairs=report.equal_pairs, iso_pairs=tuple(found))


@dataclass(frozen=True)
class ShortCycleResult:
    status: str  # "clear" | "cycle_found" | "budget_exceeded"
    witness: Optional[tuple] = None
    nodes_expanded: int = 0


def check_no_short_cycles(
    q: Quiver, max_length: int, budget: int = SHORT_CYCLE_NODE_BUDGET
) -> ShortCycleResult:
    """Enumerate non-backtracking mutation walks from q up to the given length.

    "clear" means q never reappears along any such walk (adjacent steps
    distinct, no mutation at isolated vertices).  Traversal is
    depth-first in ascending vertex order, so results and witnesses are
    deterministic; the node budget bounds memory and time, and running
    out is reported rather than raised.
    """
    if max_length < 2:
        raise ConstraintError("short-cycle search needs max length >= 2")
    nodes = 0
    # Stack entries: (quiver, last_vertex, walk_so_far)
    stack = [(q, 0, ())]
    while stack:
        current, last, walk = stack.pop()
        if len(walk) == max_length:
            continue
        for v in range(current.n, 0, -1):
            if v == last or current.is_isolated(v):
                continue
            nodes += 1
            if nodes > budget:
                return ShortCycleResult("budget_exceeded", None, nodes)
            nxt = mutate(current, v)
            new_walk = walk + (v,)
            if nxt == q:
                return ShortCycleResult("cycle_found", new_walk, nodes)
            stack.append((nxt, v, new_walk))
    return ShortCycleResult("clear", None, nodes)


@dataclass(frozen=True)
class LemmaReport:
    """Waypoint identities checked on a trace of the main cycle family."""

    applicable: bool
    core_subquiver_identities: Optional[bool] = None
    rim_sink_mutations: Optional[bool] = None
    sink_source_census: Optional[bool] = None
    corner_window_equalities: Optional[bool] = None

    def all_pass(self) -> bool:
        return self.applicable and all(
            flag
            for flag in (
                self.core_subquiver_identities,
                self.rim_sink_mutations,
                self.sink_source_census,
                self.corner_window_equalities,
            )
        )


def inspect_trace_lemmas(trace: CycleTrace, n: int, k: int) -> LemmaReport:
    """Spot-check the structural facts that hold along the main family's cycle.

    Inapplicable (without error) unless the trace is a closed run of the
    standard length n+4k sequence on n vertices.
    """
    spec = trace.spec
    if (
        n < 4
        or k < 1
        or spec.base.n != n
        or spec.steps != theorem_sequence(n, k)
        or not trace.closed
        or trace.quivers is None
    ):
        return LemmaReport(applicable=False)

    qs = trace.quivers
    first = list(range(1, n))  # vertex set [1, n-1]
    window = [1, 2, n]

    # Restrictions to [1, n-1]: waypoints R and L carry the acyclic core,
    # the base keeps its core across the first and last steps, and the
    # left/right rims mirror each other.
    r_idx, l_idx = 2 * k + 1, 2 * k + n
    core = restrict(qs[r_idx], first)
    ok_core = (
        restrict(qs[l_idx], first) == core
        and restrict(qs[0], first) == restrict(qs[1], first)
        and restrict(qs[0], first) == restrict(qs[4 * k + n], first)
    )
    for ell in range(0, 2 * k + 1):
        ok_core = ok_core and restrict(qs[4 * k + n - ell], first) == restrict(
            qs[ell + 1], first
        )

    # Every mutation at a vertex >= 3 is a sink mutation when traversed
    # from the base: the first step at n, and the bottom rim sweep.
    ok_sinks = qs[0].is_sink(n)
    for m in range(1, n - 2):
        vertex = n - m
        ok_sinks = ok_sinks and qs[2 * k + m].is_sink(vertex)

    # Exactly four quivers have exactly one sink-or-source vertex.
    special = {0, 1, 2 * k + 1, 2 * k + n - 2}
    ok_census = True
    for j in range(trace.length):
        count = sum(
            1 for v in qs[j].vertices() if qs[j].is_sink(v) or qs[j].is_source(v)
        )
        ok_census = ok_census and ((count == 1) == (j in special))

    # The {1, 2, n} window repeats between the two left corners.
    ok_window = True
    for j in range(0, 2 * k + 1):
        ok_window = ok_window and restrict(qs[4 * k + n - 2 - j], window) == restrict(
            qs[j + 1], window
        )

    return LemmaReport(
        applicable=True,
        core_subquiver_identities=ok_core,
        rim_sink_mutations=ok_sinks,
        sink_source_census=ok_census,
        corner_window_equalities=ok_window,
    )
