"""Core quiver representation, mutation, and symmetry operations."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quivercycles import (
    Permutation,
    Quiver,
    UsageError,
    canonical_form_upto_iso,
    equals,
    iso_upto_reversal,
    make_quiver,
    mutate,
    mutate_seq,
    relabel,
    restrict,
    reverse_all,
)
from quivercycles.errors import IsoSearchLimitError

from conftest import random_acyclic_large, random_quiver, rng_for


def quivers(max_n=5, max_w=9):
    """Hypothesis strategy for arbitrary small quivers."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        upper = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                upper[(i, j)] = draw(st.integers(min_value=-max_w, max_value=max_w))
        return make_quiver(n, upper)

    return build()


class TestMakeQuiver:
    def test_zero_matrix(self):
        q = make_quiver(3, {(1, 2): 0, (2, 3): 0, (1, 3): 0})
        assert q.rows == ((0, 0, 0), (0, 0, 0), (0, 0, 0))
        assert q == make_quiver(3)

    def test_markov_quiver(self):
        # cyclic triangle 1->2->3->1 with all weights 2
        q = make_quiver(3, {(1, 2): 2, (2, 3): 2, (1, 3): -2})
        assert q.b(1, 2) == 2 and q.b(2, 3) == 2 and q.b(3, 1) == 2
        assert not q.is_acyclic()

    def test_four_vertex_symbolic_substitution(self):
        # 4-vertex cycle base with all six parameters equal to 2
        a = b = c = d = e = f = 2
        q = make_quiver(
            4,
            {
                (1, 2): a,
                (2, 3): b * a * a - b + a * d,
                (1, 3): -(d + a * b),
                (1, 4): f,
                (2, 4): e,
                (3, 4): c,
            },
        )
        assert q.b(1, 2) == 2
        assert q.b(2, 3) == 10
        assert q.b(3, 1) == 6
        assert q.b(1, 4) == 2
        assert abs(q.b(4, 2)) == 2
        assert q.b(3, 4) == 2

    def test_key_out_of_range(self):
        with pytest.raises(UsageError):
            make_quiver(3, {(2, 1): 5})
        with pytest.raises(UsageError):
            make_quiver(3, {(1, 4): 5})

    def test_skew_symmetry_enforced(self):
        with pytest.raises(UsageError):
            Quiver([[0, 1], [1, 0]])
        with pytest.raises(UsageError):
            Quiver([[1, 0], [0, 0]])


class TestMutate:
    def test_acyclic_triangle_source_mutation(self):
        # 1->2 (a), 2->3 (b), 1->3 (c); mutating at the source 1 only
        # reverses the arrows at 1
        a, b, c = 5, 7, 3
        q = make_quiver(3, {(1, 2): a, (2, 3): b, (1, 3): c})
        m = mutate(q, 1)
        assert m.b(2, 1) == a and m.b(2, 3) == b and m.b(3, 1) == c

    def test_elbow_mutation_creates_cycle(self):
        # 1->2 (a), 3->1 (b), 3->2 (c); mutating at 1 composes 3->1->2
        a, b, c = 2, 3, 4
        q = make_quiver(3, {(1, 2): a, (1, 3): -b, (2, 3): -c})
        m = mutate(q, 1)
        assert m.b(2, 1) == a
        assert m.b(1, 3) == b
        assert m.b(3, 2) == a * b + c == 10

    def test_out_of_range(self):
        q = make_quiver(2, {(1, 2): 1})
        with pytest.raises(UsageError):
            mutate(q, 0)
        with pytest.raises(UsageError):
            mutate(q, 3)

    def test_input_unchanged(self):
        q = make_quiver(3, {(1, 2): 2, (2, 3): 2, (1, 3): -2})
        rows = q.rows
        mutate(q, 1)
        assert q.rows == rows

    @given(quivers(), st.data())
    @settings(max_examples=200, deadline=None)
    def test_involution(self, q, data):
        i = data.draw(st.integers(min_value=1, max_value=q.n))
        assert mutate(mutate(q, i), i) == q

    @given(quivers(), st.data())
    @settings(max_examples=200, deadline=None)
    def test_skew_symmetry_preserved(self, q, data):
        i = data.draw(st.integers(min_value=1, max_value=q.n))
        m = mutate(q, i)
        assert all(
            m.b(u, v) == -m.b(v, u) for u in m.vertices() for v in m.vertices()
        )

    @given(quivers(), st.data())
    @settings(max_examples=150, deadline=None)
    def test_commutes_with_reversal(self, q, data):
        i = data.draw(st.integers(min_value=1, max_value=q.n))
        assert mutate(reverse_all(q), i) == reverse_all(mutate(q, i))

    @given(quivers(), st.data())
    @settings(max_examples=150, deadline=None)
    def test_commutes_with_relabeling(self, q, data):
        i = data.draw(st.integers(min_value=1, max_value=q.n))
        image = data.draw(st.permutations(list(range(1, q.n + 1))))
        sigma = Permutation(image)
        assert mutate(relabel(q, sigma), sigma(i)) == relabel(mutate(q, i), sigma)

    @given(quivers(max_n=6), st.data())
    @settings(max_examples=150, deadline=None)
    def test_sink_source_mutation_only_flips_incident_arrows(self, q, data):
        candidates = [v for v in q.vertices() if q.is_sink(v) or q.is_source(v)]
        if not candidates:
            return
        i = data.draw(st.sampled_from(candidates))
        m = mutate(q, i)
        for u in q.vertices():
            for v in q.vertices():
                if i in (u, v):
                    assert m.b(u, v) == -q.b(u, v)
                else:
                    assert m.b(u, v) == q.b(u, v)


def arrow_model_mutate(q, i):
    """Independent oracle for mutation, working on arrow multisets:
    add one arrow j->k per path j->i->k, reverse all arrows at i, then
    cancel oriented 2-cycles."""
    n = q.n
    arrows = {}
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            w = q.b(u, v)
            if w > 0:
                arrows[(u, v)] = w
    # paths through i
    new_arrows = dict(arrows)
    for (u, v), w_in in arrows.items():
        if v != i:
            continue
        for (u2, v2), w_out in arrows.items():
            if u2 != i:
                continue
            key = (u, v2)
            new_arrows[key] = new_arrows.get(key, 0) + w_in * w_out
    # reverse at i
    reversed_arrows = {}
    for (u, v), w in new_arrows.items():
        key = (v, u) if i in (u, v) else (u, v)
        reversed_arrows[key] = reversed_arrows.get(key, 0) + w
    # cancel 2-cycles
    upper = {}
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            upper[(u, v)] = reversed_arrows.get((u, v), 0) - reversed_arrows.get((v, u), 0)
    return make_quiver(n, upper)


class TestMutateAgainstArrowModel:
    @given(quivers(), st.data())
    @settings(max_examples=300, deadline=None)
    def test_matrix_rule_matches_arrow_model(self, q, data):
        i = data.draw(st.integers(min_value=1, max_value=q.n))
        assert mutate(q, i) == arrow_model_mutate(q, i)


class TestMutateSeq:
    def test_empty_sequence(self):
        q = make_quiver(3, {(1, 2): 1})
        assert mutate_seq(q, []) == q

    def test_involution_pair(self):
        q = make_quiver(3, {(1, 2): 2, (2, 3): 3, (1, 3): -4})
        assert mutate_seq(q, [2, 2]) == q

    def test_acyclic_rotation_returns_start(self):
        rng = rng_for("rotation")
        for n in (3, 4, 5, 6):
            upper = {
                (i, j): rng.randint(1, 9)
                for i in range(1, n + 1)
                for j in range(i + 1, n + 1)
            }
            q = make_quiver(n, upper)
            assert mutate_seq(q, range(n, 0, -1)) == q
            assert mutate_seq(q, range(1, n + 1)) == q


class TestRestrict:
    def test_full_restriction_identity(self):
        rng = rng_for("restrict-id")
        q = random_quiver(rng, 5)
        assert restrict(q, range(1, 6)) == q

    def test_worked_example_core(self, example_core_quiver):
        spec_core = mutate_seq(example_core_quiver, [2, 1, 2, 1])
        assert spec_core.b(1, 2) == 3
        assert spec_core.b(2, 3) == 566
        assert spec_core.b(2, 4) == 490
        assert spec_core.b(3, 4) == 4
        assert spec_core.b(4, 1) == 187
        assert spec_core.b(3, 1) == 216

    def test_commutes_with_mutation_on_retained_vertex(self):
        rng = rng_for("restrict-commute")
        for _ in range(30):
            q = random_quiver(rng, 6, lo=1, hi=9)
            subset = sorted(rng.sample(range(1, 7), 4))
            i = rng.choice(subset)
            local = subset.index(i) + 1
            assert restrict(mutate(q, i), subset) == mutate(restrict(q, subset), local)

    def test_empty_rejected(self):
        q = make_quiver(2, {(1, 2): 1})
        with pytest.raises(UsageError):
            restrict(q, [])


class TestRelabelReverse:
    def test_reverse_involution(self):
        rng = rng_for("reverse")
        q = random_quiver(rng, 4)
        assert reverse_all(reverse_all(q)) == q

    def test_relabel_identity(self):
        rng = rng_for("relabel-id")
        q = random_quiver(rng, 4)
        assert relabel(q, Permutation.identity(4)) == q

    def test_relabel_cyclic_shift_example(self):
        # 1->2 (a), 1->3 (c), 2->3 (b) relabeled by 1->2, 2->3, 3->1
        # becomes 2->3 (a), 2->1 (c), 3->1 (b)
        a, b, c = 4, 6, 9
        r = make_quiver(3, {(1, 2): a, (1, 3): c, (2, 3): b})
        r_prime = relabel(r, Permutation((2, 3, 1)))
        assert r_prime.b(2, 3) == a
        assert r_prime.b(2, 1) == c
        assert r_prime.b(3, 1) == b

    def test_bad_permutation(self):
        with pytest.raises(UsageError):
            Permutation((1, 1, 3))


class TestIsomorphism:
    def test_self_identity_witness(self):
        rng = rng_for("iso-self")
        q = random_quiver(rng, 5)
        sigma, reversed_flag = iso_upto_reversal(q, q)
        assert sigma == Permutation.identity(5)
        assert reversed_flag is False
        assert equals(q, q)

    def test_weight_multiset_prunes(self):
        q1 = make_quiver(3, {(1, 2): 2, (2, 3): 3, (1, 3): 4})
        q2 = make_quiver(3, {(1, 2): 2, (2, 3): 3, (1, 3) : 5})
        assert iso_upto_reversal(q1, q2) is None

    def test_reversal_witness(self):
        rng = rng_for("iso-rev")
        q = random_quiver(rng, 5)
        sigma = Permutation((3, 1, 4, 5, 2))
        target = relabel(reverse_all(q), sigma)
        witness = iso_upto_reversal(q, target)
        assert witness is not None
        found_sigma, reversed_flag = witness
        base = reverse_all(q) if reversed_flag else q
        assert relabel(base, found_sigma) == target

    def test_size_limit(self):
        q = make_quiver(11)
        with pytest.raises(IsoSearchLimitError):
            iso_upto_reversal(q, q)

    @given(quivers(max_n=5), st.data())
    @settings(max_examples=100, deadline=None)
    def test_planted_witness_recovered(self, q, data):
        image = data.draw(st.permutations(list(range(1, q.n + 1))))
        flip = data.draw(st.booleans())
        planted = relabel(reverse_all(q) if flip else q, Permutation(image))
        witness = iso_upto_reversal(q, planted)
        assert witness is not None
        sigma, reversed_flag = witness
        base = reverse_all(q) if reversed_flag else q
        assert relabel(base, sigma) == planted

    def test_canonical_form_invariance(self):
        rng = rng_for("canon")
        q = random_quiver(rng, 4)
        sigma = Permutation((4, 2, 1, 3))
        assert canonical_form_upto_iso(q) == canonical_form_upto_iso(relabel(q, sigma))
        assert canonical_form_upto_iso(q) == canonical_form_upto_iso(reverse_all(q))


class TestPredicates:
    def test_cyclic_large_weight_triangle(self):
        for b, c in ((2, 2), (3, 5), (9, 4)):
            q = make_quiver(3, {(1, 2): 2, (2, 3): b, (1, 3): -c})
            assert not q.is_acyclic()
            assert q.sinks() == [] and q.sources() == []
            assert q.has_large_weights()

    def test_zero_quiver(self):
        q = make_quiver(4)
        assert q.is_acyclic()
        assert q.sinks() == [1, 2, 3, 4]
        assert q.sources() == [1, 2, 3, 4]
        assert not q.has_large_weights()

    def test_family_base_has_unique_sink_at_n(self):
        from quivercycles import CycleParams, build_theorem1

        rng = rng_for("sink-at-n")
        for n, k in ((4, 1), (5, 2)):
            q = {
                (i, j): rng.randint(2, 9)
                for i in range(1, n + 1)
                for j in range(i + 1, n + 1)
            }
            base = build_theorem1(CycleParams(n, k, q)).base
            assert base.sinks() == [n]
            assert base.sources() == []

    def test_orientation_signature(self):
        q = make_quiver(3, {(1, 2): 7, (1, 3): -2})
        assert q.orientation_signature() == ((0, 1, -1), (-1, 0, 0), (1, 0, 0))


class TestArbitraryPrecision:
    def test_weights_grow_beyond_64_bits(self):
        # alternating mutations blow up weights Chebyshev-fast
        q = make_quiver(3, {(1, 2): 6, (1, 3): -7, (2, 3): -8})
        cur = q
        steps = [1, 2] * 40
        cur = mutate_seq(cur, steps)
        top = max(abs(cur.b(i, j)) for i in (1, 2) for j in range(i + 1, 4))
        assert top > 2**64
        # walking back recovers the start exactly
        assert mutate_seq(cur, steps[::-1]) == q
