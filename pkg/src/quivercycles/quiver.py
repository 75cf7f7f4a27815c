"""Labeled quivers as skew-symmetric integer matrices, and mutation.

Vertices carry the labels 1..n throughout the public API.  Entries are
plain Python integers, so all arithmetic is exact at arbitrary size;
weights along the long cycles grow like Chebyshev values and overflow
any fixed-width type quickly.

All values are immutable; every operation returns a fresh quiver.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Optional, Sequence

from .errors import ConstraintError, IsoSearchLimitError, UsageError

ISO_SEARCH_MAX_N = 10
CANONICAL_FORM_MAX_N = 8


class Quiver:
    """An n-vertex quiver encoded by its skew-symmetric exchange matrix.

    ``b(i, j)`` is the number of arrows i -> j minus the number j -> i,
    for labels 1 <= i, j <= n.
    """

    __slots__ = ("n", "_rows", "_hash")

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise UsageError("matrix is not square")
        for i in range(n):
            if rows[i][i] != 0:
                raise UsageError("nonzero diagonal entry at vertex %d" % (i + 1))
            for j in range(i + 1, n):
                if rows[i][j] != -rows[j][i]:
                    raise UsageError(
                        "matrix not skew-symmetric at (%d, %d)" % (i + 1, j + 1)
                    )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_hash", hash(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Quiver is immutable")

    # -- basic protocol ------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Quiver) and self._rows == other._rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "Quiver(%r)" % (list(list(r) for r in self._rows),)

    def b(self, i: int, j: int) -> int:
        """Entry b_ij for vertex labels i, j in 1..n."""
        self._check_vertex(i)
        self._check_vertex(j)
        return self._rows[i - 1][j - 1]

    @property
    def rows(self) -> tuple:
        return self._rows

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def _check_vertex(self, i: int) -> None:
        if not (isinstance(i, int) and 1 <= i <= self.n):
            raise UsageError("vertex %r out of range 1..%d" % (i, self.n))

    # -- structural predicates ------------------------------------------

    def is_sink(self, i: int) -> bool:
        """True when every arrow between i and another vertex points into i."""
        self._check_vertex(i)
        return all(x <= 0 for x in self._rows[i - 1])

    def is_source(self, i: int) -> bool:
        self._check_vertex(i)
        return all(x >= 0 for x in self._rows[i - 1])

    def sinks(self) -> list[int]:
        return [i for i in self.vertices() if self.is_sink(i)]

    def sources(self) -> list[int]:
        return [i for i in self.vertices() if self.is_source(i)]

    def is_isolated(self, i: int) -> bool:
        self._check_vertex(i)
        return all(x == 0 for x in self._rows[i - 1])

    def is_acyclic(self) -> bool:
        """No oriented cycles in the arrow digraph (edges i->j where b_ij > 0)."""
        indeg = [0] * self.n
        for i in range(self.n):
            for j in range(self.n):
                if self._rows[i][j] > 0:
                    indeg[j] += 1
        stack = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for j in range(self.n):
                if self._rows[v][j] > 0:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        stack.append(j)
        return seen == self.n

    def has_large_weights(self) -> bool:
        """Every pair of distinct vertices is joined by at least two arrows."""
        return all(
            abs(self._rows[i][j]) >= 2
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def orientation_signature(self) -> tuple:
        """Matrix of entry signs (-1, 0, 1)."""
        return tuple(
            tuple((x > 0) - (x < 0) for x in row) for row in self._rows
        )

    def arrow_count(self) -> int:
        """Total number of arrows, i.e. the sum of weights over vertex pairs."""
        return sum(
            abs(self._rows[i][j])
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def weight_multiset(self, i: int) -> tuple:
        """Sorted absolute weights incident to vertex i (an iso invariant)."""
        self._check_vertex(i)
        row = self._rows[i - 1]
        return tuple(sorted(abs(row[j]) for j in range(self.n) if j != i - 1))

    def canonical_key(self) -> bytes:
        """Byte serialization of the upper triangle; keys labeled equality."""
        parts = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                parts.append(str(self._rows[i][j]))
        return ("%d;" % self.n + ",".join(parts)).encode("ascii")


def make_quiver(n: int, upper: Optional[Mapping[tuple, int]] = None) -> Quiver:
    """Build a quiver from its upper-triangle entries.

    ``upper`` maps pairs (i, j) with 1 <= i < j <= n to b_ij; unspecified
    pairs are zero.
    """
    if n < 1:
        raise UsageError("vertex count must be positive")
    rows = [[0] * n for _ in range(n)]
    for (i, j), value in (upper or {}).items():
        if not (1 <= i < j <= n):
            raise UsageError("key (%r, %r) out of range for n=%d" % (i, j, n))
        rows[i - 1][j - 1] = int(value)
        rows[j - 1][i - 1] = -int(value)
    return Quiver(rows)


def mutate(q: Quiver, i: int) -> Quiver:
    """Mutate at vertex i: compose paths through i, then reverse arrows at i.

    Oriented 2-cycles created in the first step cancel against existing
    arrows; both effects are captured by the exchange-matrix update
    b'_uv = b_uv + (|b_ui| b_iv + b_ui |b_iv|) / 2.
    """
    q._check_vertex(i)
    k = i - 1
    old = q._rows
    n = q.n
    new = [list(row) for row in old]
    for u in range(n):
        if u == k:
            continue
        buk = old[u][k]
        row_u = new[u]
        for v in range(n):
            if v == k or v == u:
                continue
            bkv = old[k][v]
            if buk > 0 and bkv > 0:
                row_u[v] += buk * bkv
            elif buk < 0 and bkv < 0:
                row_u[v] += -(buk * bkv)
    for v in range(n):
        new[k][v] = -old[k][v]
        new[v][k] = -old[v][k]
    return Quiver(new)


def mutate_seq(q: Quiver, steps: Iterable[int]) -> Quiver:
    """Apply mutations in application order (first entry first)."""
    for i in steps:
        q = mutate(q, i)
    return q


def restrict(q: Quiver, subset: Iterable[int]) -> Quiver:
    """Full subquiver on the given vertices, reindexed to 1..|S| in sorted order."""
    vs = sorted(set(subset))
    if not vs:
        raise UsageError("restriction to an empty vertex set")
    for v in vs:
        q._check_vertex(v)
    return Quiver([[q.rows[u - 1][v - 1] for v in vs] for u in vs])


def reverse_all(q: Quiver) -> Quiver:
    """Reverse every arrow (negate the matrix)."""
    return Quiver([[-x for x in row] for row in q.rows])


class Permutation:
    """A bijection on the labels 1..n."""

    __slots__ = ("image",)

    def __init__(self, image: Sequence[int]):
        image = tuple(image)
        n = len(image)
        if sorted(image) != list(range(1, n + 1)):
            raise UsageError("permutation image %r is not a bijection on 1..%d" % (image, n))
        object.__setattr__(self, "image", image)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise UsageError("vertex %r out of range 1..%d" % (i, self.n))
        return self.image[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return "Permutation(%r)" % (list(self.image),)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> "Permutation":
        """Build from a sparse mapping; unmentioned labels stay fixed."""
        image = list(range(1, n + 1))
        for src, dst in mapping.items():
            image[src - 1] = dst
        return cls(image)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.image, start=1):
            inv[img - 1] = i
        return Permutation(inv)


def relabel(q: Quiver, sigma: Permutation) -> Quiver:
    """Relabel vertices: entry b'_{sigma(i) sigma(j)} equals b_ij."""
    if sigma.n != q.n:
        raise UsageError("permutation size %d does not match n=%d" % (sigma.n, q.n))
    rows = [[0] * q.n for _ in range(q.n)]
    for i in range(q.n):
        si = sigma.image[i] - 1
        for j in range(q.n):
            rows[si][sigma.image[j] - 1] = q.rows[i][j]
    return Quiver(rows)


def equals(q1: Quiver, q2: Quiver) -> bool:
    return q1 == q2


def _iso_witness(q1: Quiver, q2: Quiver) -> Optional[Permutation]:
    """A permutation with relabel(q1, sigma) == q2, found by pruned search."""
    n = q1.n
    if len(q1.sinks()) != len(q2.sinks()) or len(q1.sources()) != len(q2.sources()):
        return None
    # Candidate images share the incident-weight multiset and the
    # sink/source flags (relabeling preserves both).
    candidates = [
        [
            w
            for w in range(1, n + 1)
            if q1.weight_multiset(v) == q2.weight_multiset(w)
            and q1.is_sink(v) == q2.is_sink(w)
            and q1.is_source(v) == q2.is_source(w)
        ]
        for v in range(1, n + 1)
    ]
    if any(not c for c in candidates):
        return None
    b1, b2 = q1.rows, q2.rows
    image = [0] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in candidates[v]:
            if used[w - 1]:
                continue
            if any(b2[image[u] - 1][w - 1] != b1[u][v] for u in range(v)):
                continue
            image[v] = w
            used[w - 1] = True
            if extend(v + 1):
                return True
            used[w - 1] = False
        return False

    if extend(0):
        return Permutation(image)
    return None


def iso_upto_reversal(q1: Quiver, q2: Quiver) -> Optional[tuple]:
    """Search for sigma with relabel(q1', sigma) == q2, q1' being q1 or its reversal.

    Returns (sigma, reversed_flag) or None.  Supported for n <= 10; the
    pruned permutation search degrades beyond that.
    """
    if q1.n != q2.n:
        return None
    if q1.n > ISO_SEARCH_MAX_N:
        raise IsoSearchLimitError(
            "isomorphism search supports n <= %d, got n=%d" % (ISO_SEARCH_MAX_N, q1.n)
        )
    sigma = _iso_witness(q1, q2)
    if sigma is not None:
        return sigma, False
    sigma = _iso_witness(reverse_all(q1), q2)
    if sigma is not None:
        return sigma, True
    return None


def canonical_form_upto_iso(q: Quiver) -> Quiver:
    """Lexicographically minimal matrix over all relabelings and the reversal.

    Intended as a canonical representative for hashing up to isomorphism;
    brute force, so restricted to n <= 8.
    """
    if q.n > CANONICAL_FORM_MAX_N:
        raise ConstraintError(
            "canonical form supports n <= %d, got n=%d" % (CANONICAL_FORM_MAX_N, q.n)
        )
    best = None
    for base in (q, reverse_all(q)):
        for image in itertools.permutations(range(1, q.n + 1)):
            candidate = relabel(base, Permutation(image)).rows
            if best is None or candidate < best:
                best = candidate
    return Quiver(best)


def validate_steps(steps: Sequence[int], n: int, cycle_candidate: bool = False) -> tuple:
    """Check a mutation sequence (application order) and return it as a tuple.

    Rejects out-of-range labels and consecutive repeats; for cycle
    candidates the first and last entries must differ as well.
    """
    steps = tuple(int(s) for s in steps)
    for s in steps:
        if not 1 <= s <= n:
            raise UsageError("step %r out of range 1..%d" % (s, n))
    for a, b in zip(steps, steps[1:]):
        if a == b:
            raise UsageError("consecutive repeated step %d" % a)
    if cycle_candidate and len(steps) >= 2 and steps[0] == steps[-1]:
        raise UsageError("cycle sequence starts and ends with the same vertex")
    return steps
