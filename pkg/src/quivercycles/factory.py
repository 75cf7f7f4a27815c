"""Constructors for the parametric mutation-cycle families.

Each builder returns a CycleSpec: a base quiver plus the mutation
sequence (application order) that returns to it.  The gallery fixtures
were transcribed by hand from pictures, which is the most error-prone
step in this package, so every built spec is re-verified by actually
running the mutations before it leaves this module; a failure raises
TranscriptionError rather than shipping a wrong fixture.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Optional

from .errors import ConstraintError, TranscriptionError
from .quiver import Quiver, make_quiver, mutate_seq, validate_steps
from .three_vertex import chebyshev_value


@dataclass(frozen=True)
class CycleSpec:
    """A declared mutation cycle: base quiver and steps in application order."""

    base: Quiver
    steps: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "steps", validate_steps(self.steps, self.base.n, cycle_candidate=True)
        )

    @property
    def length(self) -> int:
        return len(self.steps)

    def quiver_at(self, j: int) -> Quiver:
        """The j-th quiver along the cycle (j mutations applied to the base)."""
        return mutate_seq(self.base, self.steps[: j % self.length])

    def rotated(self, j: int) -> "CycleSpec":
        """Re-base at the j-th quiver, keeping the traversal direction."""
        j = j % self.length
        return CycleSpec(self.quiver_at(j), self.steps[j:] + self.steps[:j])

    def reversed_direction(self) -> "CycleSpec":
        """Traverse the same cycle backwards from the same base."""
        return CycleSpec(self.base, self.steps[::-1])


@dataclass(frozen=True)
class CycleParams:
    """Integer parameters q_ij >= 2 (one per vertex pair) plus the loop count k."""

    n: int
    k: int
    q: Mapping[tuple, int]

    def __post_init__(self):
        if self.n < 4:
            raise ConstraintError("family requires n >= 4, got n=%d" % self.n)
        if self.k < 1:
            raise ConstraintError("family requires k >= 1, got k=%d" % self.k)
        q = {}
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                try:
                    value = int(self.q[(i, j)])
                except KeyError:
                    raise ConstraintError("missing parameter q_%d%d" % (i, j))
                if value < 2:
                    raise ConstraintError(
                        "parameter q_%d%d = %d violates q_ij >= 2" % (i, j, value)
                    )
                q[(i, j)] = value
        extras = set(self.q) - set(q)
        if extras:
            raise ConstraintError("unexpected parameter keys %r" % (sorted(extras),))
        object.__setattr__(self, "q", q)

    @classmethod
    def uniform(cls, n: int, k: int, value: int) -> "CycleParams":
        q = {(i, j): value for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        return cls(n, k, q)

    def p(self, j: int) -> int:
        """p_j from p_0 = 1, p_1 = q_12, p_{j+1} = q_12 p_j - p_{j-1}."""
        return chebyshev_value(self.q[(1, 2)], j)


def theorem_sequence(n: int, k: int) -> tuple:
    """The length n+4k sequence: n, (1 2)^k, n-1 .. 1, (2 1)^k (application order)."""
    seq = [n]
    seq += [1, 2] * k
    seq += list(range(n - 1, 0, -1))
    seq += [2, 1] * k
    return tuple(seq)


def build_theorem1(params: CycleParams) -> CycleSpec:
    """Closed-form base quiver for the length n+4k cycle family.

    Rows 1 and 2 mix the q-parameters through the p-sequence; all other
    entries are the parameters themselves.
    """
    n, k, q = params.n, params.k, params.q
    p = [params.p(j) for j in range(2 * k + 1)]
    upper = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if i == 1 and 3 <= j <= n - 1:
                upper[(i, j)] = -p[2 * k - 2] * q[(1, j)] - p[2 * k - 1] * q[(2, j)]
            elif i == 2 and 3 <= j <= n - 1:
                upper[(i, j)] = p[2 * k - 1] * q[(1, j)] + p[2 * k] * q[(2, j)]
            else:
                upper[(i, j)] = q[(i, j)]
    return CycleSpec(make_quiver(n, upper), theorem_sequence(n, k))


def build_theorem4(tilde_r: Quiver, extension: Mapping[int, int], k: int) -> CycleSpec:
    """Same family, built from its acyclic core.

    ``tilde_r`` is an (n-1)-vertex quiver with b_ij >= 2 for i < j; the
    base quiver restricts to mutate_seq(tilde_r, [2, 1]*k) on the first
    n-1 vertices and hangs vertex n off it as a sink with the given
    weights b_in = extension[i] >= 2.
    """
    m = tilde_r.n
    n = m + 1
    if n < 4:
        raise ConstraintError("family requires n >= 4, got n=%d" % n)
    if k < 1:
        raise ConstraintError("family requires k >= 1, got k=%d" % k)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            if tilde_r.b(i, j) < 2:
                raise ConstraintError(
                    "core quiver needs b_%d%d >= 2, got %d" % (i, j, tilde_r.b(i, j))
                )
    if sorted(extension) != list(range(1, m + 1)):
        raise ConstraintError("extension must assign b_in for every i in 1..%d" % m)
    ext = {i: int(extension[i]) for i in extension}
    for i, value in ext.items():
        if value < 2:
            raise ConstraintError("extension b_%d%d = %d violates b_in >= 2" % (i, n, value))
    core = mutate_seq(tilde_r, [2, 1] * k)
    upper = {}
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            upper[(i, j)] = core.b(i, j)
        upper[(i, n)] = ext[i]
    return CycleSpec(make_quiver(n, upper), theorem_sequence(n, k))


def build_acyclic_rotation(q: Quiver) -> CycleSpec:
    """The length-n rotation cycle of an acyclic quiver with b_ij >= 0 for i < j."""
    n = q.n
    if n < 2:
        raise ConstraintError("rotation cycle needs n >= 2 (no mutation at an isolated vertex)")
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if q.b(i, j) < 0:
                raise ConstraintError(
                    "rotation requires b_ij >= 0 for i < j; b_%d%d = %d" % (i, j, q.b(i, j))
                )
    if not q.is_acyclic():
        raise ConstraintError("rotation requires an acyclic quiver")
    for v in q.vertices():
        if q.is_isolated(v):
            raise ConstraintError("rotation would mutate at isolated vertex %d" % v)
    return CycleSpec(q, tuple(range(n, 0, -1)))


# -- gallery fixtures -------------------------------------------------------
#
# Base quivers are stored as upper-triangle formulas in the figure's own
# parameter names; sequences follow the traversal around each diagram.


@dataclass(frozen=True)
class GalleryFamily:
    name: str
    n: int
    length: int
    param_names: tuple
    defaults: dict
    check: Callable[[dict], None]
    upper: Callable[[dict], dict]
    steps: tuple
    note: str = ""


def _check_vortex6(p: dict) -> None:
    for name in "abcdef":
        if p[name] < 0:
            raise ConstraintError("vortex6 requires %s >= 0, got %d" % (name, p[name]))


def _upper_vortex6(p: dict) -> dict:
    a, b, c, d, e, f = (p[x] for x in "abcdef")
    return {
        (1, 2): -a,
        (1, 3): -d,
        (1, 4): -f,
        (2, 3): -(b + c * e),
        (2, 4): e,
        (3, 4): -c,
    }


def _check_rosette12a(p: dict) -> None:
    a, b, c, d, e, f = (p[x] for x in "abcdef")
    for name in "abcf":
        if p[name] < 2:
            raise ConstraintError("rosette12a requires %s >= 2, got %d" % (name, p[name]))
    if d < max(2, 2 - a * b + c * f):
        raise ConstraintError("rosette12a requires d >= max(2, 2 - a*b + c*f)")
    if e < max(2, 2 + a * f - b * c):
        raise ConstraintError("rosette12a requires e >= max(2, 2 + a*f - b*c)")


def _upper_rosette12a(p: dict) -> dict:
    a, b, c, d, e, f = (p[x] for x in "abcdef")
    ebar = e + b * c - a * f
    return {
        (1, 2): a,
        (1, 3): d,
        (1, 4): -f,
        (2, 3): b,
        (2, 4): -ebar,
        (3, 4): a * b * f + b * ebar + d * f - c,
    }


def _check_rosette12b(p: dict) -> None:
    a, b, c, d, e, f = (p[x] for x in "abcdef")
    for name in "bdef":
        if p[name] < 2:
            raise ConstraintError("rosette12b requires %s >= 2, got %d" % (name, p[name]))
    if c < max(2, 2 + b * e - d * f):
        raise ConstraintError("rosette12b requires c >= max(2, 2 + b*e - d*f)")
    if a < max(2, 2 - d * d * e * f - c * d * e + b * d + f * e):
        raise ConstraintError(
            "rosette12b requires a >= max(2, 2 - d^2*e*f - c*d*e + b*d + f*e)"
        )


def _upper_rosette12b(p: dict) -> dict:
    a, b, c, d, e, f = (p[x] for x in "abcdef")
    abar = d * d * e * f + c * d * e - b * d - f * e + a
    chat = c + d * f
    return {
        (1, 2): abar,
        (1, 3): -d,
        (1, 4): f,
        (2, 3): -b,
        (2, 4): e,
        (3, 4): -chat,
    }


def _check_horseshoe10(p: dict) -> None:
    for name in "abcdef":
        if p[name] < 2:
            raise ConstraintError("horseshoe10 requires %s >= 2, got %d" % (name, p[name]))


def _upper_horseshoe10(p: dict) -> dict:
    a, b, c, d, e, f = (p[x] for x in "abcdef")
    bbar = a * a * b + a * d - b
    ahat = bbar * d + a * b * bbar - a
    dhat = d + a * b
    return {
        (1, 2): ahat,
        (1, 3): -dhat,
        (1, 4): f,
        (2, 3): bbar,
        (2, 4): e,
        (3, 4): c,
    }


def _check_cycle7(p: dict) -> None:
    for name in "abcdefghij":
        if p[name] < 0:
            raise ConstraintError("cycle7 requires %s >= 0, got %d" % (name, p[name]))


def _upper_cycle7(p: dict) -> dict:
    a, b, c, d, e, f, g, h, i, j = (p[x] for x in "abcdefghij")
    return {
        (1, 2): a,
        (1, 3): e,
        (1, 4): h,
        (1, 5): j,
        (2, 3): b,
        (2, 4): f + d * i,
        (2, 5): -i,
        (3, 4): c + g * d,
        (3, 5): -g,
        (4, 5): d,
    }


GALLERY = {
    fam.name: fam
    for fam in (
        GalleryFamily(
            name="vortex6",
            n=4,
            length=6,
            param_names=tuple("abcdef"),
            defaults={k: v for k, v in zip("abcdef", (1, 2, 3, 4, 5, 6))},
            check=_check_vortex6,
            upper=_upper_vortex6,
            steps=(4, 3, 4, 2, 4, 1),
            note="every quiver on the cycle is a vortex",
        ),
        GalleryFamily(
            name="rosette12a",
            n=4,
            length=12,
            param_names=tuple("abcdef"),
            defaults={k: 2 for k in "abcdef"},
            check=_check_rosette12a,
            upper=_upper_rosette12a,
            steps=(1, 2, 3, 2, 3, 4, 3, 4, 1, 4, 1, 2),
        ),
        GalleryFamily(
            name="rosette12b",
            n=4,
            length=12,
            param_names=tuple("abcdef"),
            defaults={k: 2 for k in "abcdef"},
            check=_check_rosette12b,
            upper=_upper_rosette12b,
            steps=(1, 4, 1, 3, 1, 3, 4, 2, 4, 2, 3, 2),
        ),
        GalleryFamily(
            name="horseshoe10",
            n=4,
            length=10,
            param_names=tuple("abcdef"),
            defaults={k: 2 for k in "abcdef"},
            check=_check_horseshoe10,
            upper=_upper_horseshoe10,
            steps=(4, 3, 1, 2, 1, 2, 3, 2, 1, 3),
        ),
        GalleryFamily(
            name="cycle7",
            n=5,
            length=7,
            param_names=tuple("abcdefghij"),
            defaults={k: 2 for k in "abcdefghij"},
            check=_check_cycle7,
            upper=_upper_cycle7,
            steps=(1, 5, 2, 3, 5, 4, 5),
        ),
    )
}


def gallery_names() -> list:
    return sorted(GALLERY)


def build_gallery(name: str, params: Optional[Mapping[str, int]] = None) -> CycleSpec:
    """Instantiate a transcribed fixture; verifies closure before returning."""
    try:
        family = GALLERY[name]
    except KeyError:
        raise ConstraintError(
            "unknown gallery family %r (have: %s)" % (name, ", ".join(gallery_names()))
        )
    values = dict(family.defaults)
    for key, value in (params or {}).items():
        if key not in family.param_names:
            raise ConstraintError(
                "unknown parameter %r for %s (takes %s)"
                % (key, name, ", ".join(family.param_names))
            )
        values[key] = int(value)
    family.check(values)
    spec = CycleSpec(make_quiver(family.n, family.upper(values)), family.steps)
    _self_check(spec, name)
    return spec


def _self_check(spec: CycleSpec, name: str) -> None:
    if mutate_seq(spec.base, spec.steps) != spec.base:
        raise TranscriptionError("fixture %r failed its closure self-check" % name)


def build_generalized_sink_source(
    n: int,
    a: int,
    b: int,
    q: Mapping[int, int],
    base_weight: Optional[int] = None,
) -> CycleSpec:
    """Cycle of length n+2 from an acyclic core with uniformly huge weights.

    The core on 1..n-1 has every b_ij = W; vertex n points at the band
    a < i <= b with weight q_in and receives arrows from the rest.  W
    must exceed every product q_in * q_jn (default: that maximum plus 1).
    The sequence sweeps 1..n-1 with an extra visit to n after each band.
    """
    if not (1 < a < b < n - 1):
        raise ConstraintError("cut indices must satisfy 1 < a < b < n-1")
    if sorted(q) != list(range(1, n)):
        raise ConstraintError("q must assign q_in for every i in 1..%d" % (n - 1))
    qv = {i: int(q[i]) for i in q}
    for i, value in qv.items():
        if value < 2:
            raise ConstraintError("q_%d%d = %d violates q_in >= 2" % (i, n, value))
    max_product = max(
        qv[i] * qv[j] for i in range(1, n) for j in range(1, n) if i != j
    )
    w = max_product + 1 if base_weight is None else int(base_weight)
    if w <= max_product:
        raise ConstraintError(
            "base weight %d must exceed the largest product q_in*q_jn = %d"
            % (w, max_product)
        )
    upper = {}
    for i in range(1, n):
        for j in range(i + 1, n):
            upper[(i, j)] = w
        upper[(i, n)] = -qv[i] if a < i <= b else qv[i]
    steps = (
        list(range(1, a + 1))
        + [n]
        + list(range(a + 1, b + 1))
        + [n]
        + list(range(b + 1, n))
        + [n]
    )
    spec = CycleSpec(make_quiver(n, upper), tuple(steps))
    _self_check(spec, "sinksource")
    return spec
