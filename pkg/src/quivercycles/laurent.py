"""A small exact Laurent-polynomial engine and seed mutation on top of it.

This exists as an independent oracle for the tropical degree tracker:
it expands cluster variables as honest integer Laurent polynomials in
the initial cluster and reads degrees off the support.  Exponentially
slower than the tracker, so intended for few variables and short
sequences only.
"""

from __future__ import annotations

from typing import Dict, Sequence, Tuple

from .errors import ConstraintError
from .quiver import Quiver, mutate

Monomial = Tuple[int, ...]


class LaurentPoly:
    """Integer Laurent polynomial as a map from exponent tuples to coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Monomial, int] | None = None):
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def variable(cls, nvars: int, index: int) -> "LaurentPoly":
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {mono: 1})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return LaurentPoly(self.nvars, terms)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return LaurentPoly(self.nvars, terms)

    def pow(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ConstraintError("negative powers are taken via division")
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _leading(self) -> Monomial:
        return max(self.terms)

    def _trailing(self) -> Monomial:
        return min(self.terms)

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises if the divisor does not divide evenly.

        Lex-leading-term elimination: in the Laurent ring every monomial
        is invertible, so each round cancels the current leading term.
        When the division is exact the computed quotient terms are the
        quotient's own monomials in strictly decreasing lex order, and
        the smallest of them is lexmin(self) - lexmin(divisor); dipping
        below that bound proves inexactness.  An absolute round cap
        backstops pathological non-divisible inputs.
        """
        if divisor.is_zero():
            raise ConstraintError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly(self.nvars)
        remainder = LaurentPoly(self.nvars, dict(self.terms))
        quotient: Dict[Monomial, int] = {}
        lead_d = divisor._leading()
        coeff_d = divisor.terms[lead_d]
        floor = tuple(a - b for a, b in zip(self._trailing(), divisor._trailing()))
        rounds = 0
        while not remainder.is_zero():
            rounds += 1
            if rounds > 10**6:
                raise ConstraintError("division did not terminate; not divisible")
            lead_r = remainder._leading()
            coeff_r = remainder.terms[lead_r]
            if coeff_r % coeff_d != 0:
                raise ConstraintError("inexact coefficient division")
            mono = tuple(a - b for a, b in zip(lead_r, lead_d))
            if mono < floor:
                raise ConstraintError("inexact division: quotient support exhausted")
            coeff = coeff_r // coeff_d
            quotient[mono] = quotient.get(mono, 0) + coeff
            remainder = remainder + LaurentPoly(
                self.nvars, {mono: -coeff}
            ) * divisor
        return LaurentPoly(self.nvars, quotient)

    def degree_in(self, index: int) -> int:
        """Top degree in one variable; 0 for the zero polynomial by convention."""
        if not self.terms:
            return 0
        return max(m[index] for m in self.terms)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.terms.values())


class ClusterSeed:
    """A quiver together with cluster variables expanded in the initial cluster."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.variables = [
            LaurentPoly.variable(quiver.n, i) for i in range(quiver.n)
        ]

    def mutate(self, v: int) -> None:
        q = self.quiver
        q._check_vertex(v)
        n = q.n
        m_in = LaurentPoly.one(n)
        m_out = LaurentPoly.one(n)
        for u in range(1, n + 1):
            buv = q.b(u, v)
            if buv > 0:
                m_in = m_in * self.variables[u - 1].pow(buv)
            elif buv < 0:
                m_out = m_out * self.variables[u - 1].pow(-buv)
        numerator = m_in + m_out
        self.variables[v - 1] = numerator.divide_exact(self.variables[v - 1])
        self.quiver = mutate(q, v)

    def mutate_seq(self, steps: Sequence[int]) -> None:
        for v in steps:
            self.mutate(v)

    def degrees_in(self, tracked: int) -> tuple:
        """Exact degree of each current cluster variable in x_tracked."""
        return tuple(var.degree_in(tracked - 1) for var in self.variables)
