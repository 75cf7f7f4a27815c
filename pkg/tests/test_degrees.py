"""Tropical degree tracking and its exact Laurent oracle."""

import pytest

from quivercycles import (
    ConstraintError,
    CycleParams,
    build_theorem1,
    make_quiver,
    mutate,
    track_degrees,
)
from quivercycles.laurent import ClusterSeed, LaurentPoly

from conftest import random_certified_pair, random_walk_from, rng_for


def sample_bounded_instance(rng, max_weight=6, max_len=5):
    """Random large-weight 3-vertex quiver plus a walk whose intermediate
    weights stay small enough for the Laurent oracle to expand."""
    while True:
        upper = {}
        for key in ((1, 2), (1, 3), (2, 3)):
            w = rng.choice((2, 3))
            upper[key] = w if rng.random() < 0.5 else -w
        q = make_quiver(3, upper)
        length = rng.randint(1, max_len)
        steps, last = [], None
        for idx in range(length):
            choices = [v for v in (1, 2, 3) if v != last and not (idx == 0 and v == 1)]
            steps.append(rng.choice(choices))
            last = steps[-1]
        current = q
        feasible = True
        for v in steps:
            if not current.has_large_weights():
                feasible = False
                break
            current = mutate(current, v)
            if max(abs(current.b(i, j)) for i in (1, 2) for j in range(i + 1, 4)) > max_weight:
                feasible = False
                break
        if feasible:
            return q, steps


class TestTrackDegrees:
    def test_two_loops_strictly_increase(self):
        spec = build_theorem1(CycleParams.uniform(4, 1, 2))
        state = track_degrees(spec.base, spec.steps * 2)
        assert len(state.history) == 16
        assert state.strictly_increasing()

    def test_first_step_is_the_incident_weight(self):
        rng = rng_for("degrees-first")
        for _ in range(20):
            n = rng.choice((3, 4, 5))
            upper = {}
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    w = rng.randint(2, 9)
                    upper[(i, j)] = w if rng.random() < 0.5 else -w
            q = make_quiver(n, upper)
            v = rng.randint(2, n)
            state = track_degrees(q, [v])
            assert state.history[0].new_degree == abs(q.b(1, v))

    def test_lower_bound_never_exceeds_maxplus(self):
        rng = rng_for("degrees-bound")
        runs = 0
        while runs < 100:
            q, i = random_certified_pair(rng, ns=(4, 5, 6))
            if i == 1:
                continue
            walk = random_walk_from(rng, i, q.n, rng.randint(1, 10))
            if any(a == b for a, b in zip(walk, walk[1:])):
                continue
            try:
                state = track_degrees(q, walk)
            except ConstraintError:
                continue  # walk left the large-weight regime
            runs += 1
            for step in state.history:
                assert step.lower_bound <= step.new_degree
            assert state.strictly_increasing()
            assert all(d >= 0 for d in state.degrees)

    def test_preconditions(self):
        q = make_quiver(3, {(1, 2): 2, (2, 3): 2, (1, 3): 2})
        with pytest.raises(ConstraintError):
            track_degrees(q, [1, 2])  # starts at the tracked vertex
        with pytest.raises(ConstraintError):
            track_degrees(q, [])
        small = make_quiver(3, {(1, 2): 1, (2, 3): 2, (1, 3): 2})
        with pytest.raises(ConstraintError):
            track_degrees(small, [2, 3])


class TestLaurentOracle:
    def test_polynomial_arithmetic(self):
        x = LaurentPoly.variable(2, 0)
        y = LaurentPoly.variable(2, 1)
        p = (x + y) * (x + y)
        assert p.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
        assert p.divide_exact(x + y) == x + y

    def test_division_must_be_exact(self):
        x = LaurentPoly.variable(1, 0)
        one = LaurentPoly.one(1)
        with pytest.raises(ConstraintError):
            (x + one).divide_exact(x + x)
        with pytest.raises(ConstraintError):
            xy = LaurentPoly(2, {(1, 0): 1, (0, 1): 1})
            xminusy = LaurentPoly(2, {(1, 0): 1, (0, 1): -1})
            xy.divide_exact(xminusy)

    def test_division_handles_long_quotients(self):
        # (x^50 - 1) / (x - 1) has a 50-term quotient
        num = LaurentPoly(1, {(50,): 1, (0,): -1})
        den = LaurentPoly(1, {(1,): 1, (0,): -1})
        quotient = num.divide_exact(den)
        assert len(quotient.terms) == 50
        assert quotient * den == num

    def test_seed_mutation_is_laurent(self):
        q = make_quiver(3, {(1, 2): 2, (2, 3): 2, (1, 3): -2})
        seed = ClusterSeed(q)
        seed.mutate_seq([2, 3, 2, 3])
        assert all(v.has_nonnegative_coefficients() for v in seed.variables)

    def test_seed_mutation_involution(self):
        q = make_quiver(3, {(1, 2): 2, (2, 3): 3, (1, 3): -4})
        seed = ClusterSeed(q)
        seed.mutate(2)
        seed.mutate(2)
        assert seed.quiver == q
        assert seed.variables == ClusterSeed(q).variables

    def test_maxplus_matches_exact_degrees(self):
        rng = rng_for("oracle")
        for _ in range(50):
            q, steps = sample_bounded_instance(rng)
            state = track_degrees(q, steps)
            seed = ClusterSeed(q)
            seed.mutate_seq(steps)
            assert tuple(state.degrees) == seed.degrees_in(1)

    def test_known_small_trace(self):
        q = make_quiver(3, {(1, 2): 2, (2, 3): 2, (1, 3): -2})
        state = track_degrees(q, [2, 3, 2, 3])
        seed = ClusterSeed(q)
        seed.mutate_seq([2, 3, 2, 3])
        assert tuple(state.degrees) == seed.degrees_in(1) == (1, 6, 8)
