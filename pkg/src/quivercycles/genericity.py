"""Lattice parametrization of the main cycle family and its inverse.

The family on n vertices is the polynomial image of the q-parameter
lattice; the inverse undoes the alternating mutations on the first
n-1 vertices and reads the parameters off directly.  Membership is
decided operationally: recover candidate parameters, re-parametrize,
and compare.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstraintError, NotInFamilyError
from .factory import CycleParams, CycleSpec, build_theorem1, theorem_sequence
from .quiver import Permutation, Quiver, mutate_seq, relabel, restrict, reverse_all


@dataclass(frozen=True)
class ParamVector:
    """The q_ij lattice point behind one family member."""

    n: int
    k: int
    q: dict

    def as_cycle_params(self) -> CycleParams:
        return CycleParams(self.n, self.k, dict(self.q))


def parametrize(params: CycleParams) -> Quiver:
    """The family member for a parameter choice (the cycle's base quiver)."""
    return build_theorem1(params).base


def unparametrize(q: Quiver, n: int, k: int) -> ParamVector:
    """Recover the q-parameters of a family member, or reject.

    Undoing k rounds of alternating mutations at 1 and 2 on the first
    n-1 vertices exposes the acyclic core whose entries are the q_ij for
    j <= n-1; the last column of q supplies the rest.  Raises
    NotInFamilyError when any recovered value is < 2 or when
    re-parametrizing does not reproduce q exactly.
    """
    if q.n != n:
        raise ConstraintError("expected n=%d vertices, got %d" % (n, q.n))
    if n < 4 or k < 1:
        raise ConstraintError("family requires n >= 4 and k >= 1")
    core = mutate_seq(restrict(q, range(1, n)), [1, 2] * k)
    params = {}
    for i in range(1, n):
        for j in range(i + 1, n):
            params[(i, j)] = core.b(i, j)
        params[(i, n)] = q.b(i, n)
    if any(value < 2 for value in params.values()):
        raise NotInFamilyError("recovered parameters leave the q_ij >= 2 lattice")
    vector = ParamVector(n, k, params)
    if parametrize(vector.as_cycle_params()) != q:
        raise NotInFamilyError("round trip failed: quiver is not in the family")
    return vector


_SWAP_12_34 = Permutation((2, 1, 4, 3))


def double_cycle_transform(spec: CycleSpec) -> CycleSpec:
    """The symmetry pairing each 4-vertex family cycle with its parameter swap.

    Re-bases the cycle at the quiver halfway up the far rim, reverses all
    arrows, relabels by 1<->2, 3<->4 (mutations included), and reverses
    the traversal direction.  Applied to the cycle with parameters
    (a, b, c, d, e, f) this lands exactly on the cycle with parameters
    (a, f, c, e, d, b); applying it twice is the identity.
    """
    if spec.base.n != 4:
        raise ConstraintError("the double-cycle symmetry is specific to n=4")
    if (len(spec.steps) - 4) % 4 != 0:
        raise ConstraintError("sequence length %d is not 4 + 4k" % len(spec.steps))
    k = (len(spec.steps) - 4) // 4
    if k < 1 or spec.steps != theorem_sequence(4, k):
        raise ConstraintError("spec does not carry the standard n=4 sequence")
    middle = 2 * k + 2
    rebased = spec.rotated(middle)
    base = relabel(reverse_all(rebased.base), _SWAP_12_34)
    steps = tuple(_SWAP_12_34(v) for v in rebased.steps[::-1])
    return CycleSpec(base, steps)
