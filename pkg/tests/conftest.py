"""Shared generators and enumeration oracles for the test suite."""

from __future__ import annotations

import random

import pytest

from quivercycles import (
    CycleParams,
    Permutation,
    Quiver,
    build_theorem1,
    certify_exit,
    make_quiver,
    mutate,
    relabel,
)


def rng_for(name: str) -> random.Random:
    """Deterministic per-test RNG so failures reproduce."""
    return random.Random("quivercycles:" + name)


def random_upper(rng: random.Random, n: int, lo: int, hi: int, signed: bool = True) -> dict:
    upper = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            w = rng.randint(lo, hi)
            if signed and rng.random() < 0.5:
                w = -w
            upper[(i, j)] = w
    return upper


def random_quiver(rng: random.Random, n: int, lo: int = 2, hi: int = 9) -> Quiver:
    """Random signed weights with |b_ij| in [lo, hi] (large weights when lo >= 2)."""
    return make_quiver(n, random_upper(rng, n, lo, hi, signed=True))


def random_acyclic_large(rng: random.Random, n: int, lo: int = 2, hi: int = 9) -> Quiver:
    """Random large-weight acyclic quiver: standard orientation, then relabeled."""
    q = make_quiver(n, random_upper(rng, n, lo, hi, signed=False))
    image = list(range(1, n + 1))
    rng.shuffle(image)
    return relabel(q, Permutation(image))


def random_cycle_params(rng: random.Random, n: int, k: int, lo: int = 2, hi: int = 11) -> CycleParams:
    q = {
        (i, j): rng.randint(lo, hi)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    }
    return CycleParams(n, k, q)


def random_certified_pair(rng: random.Random, ns=(4, 5, 6), lo: int = 2, hi: int = 9):
    """A (quiver, vertex) pair satisfying the exit-certificate conditions.

    Rejection sampling over random signed quivers; the acyclic ones make
    this terminate quickly (any non-sink/source vertex there certifies).
    """
    while True:
        n = rng.choice(list(ns))
        q = random_quiver(rng, n, lo, hi)
        vertices = list(q.vertices())
        rng.shuffle(vertices)
        for v in vertices:
            if certify_exit(q, v) == "certified":
                return q, v


def random_walk_from(rng: random.Random, start: int, n: int, length: int) -> list:
    walk = [start]
    while len(walk) < length:
        walk.append(rng.choice([v for v in range(1, n + 1) if v != walk[-1]]))
    return walk


def mutation_class_census(acyclic: Quiver, max_distance: int) -> dict:
    """Multi-source BFS counts by distance from the acyclic triangle.

    Starts from all three acyclic quivers of the class (the input plus
    its sink/source mutations, which are pairwise adjacent) and explores
    the labeled mutation graph exactly.
    """
    assert acyclic.n == 3 and acyclic.is_acyclic()
    sources = {acyclic}
    for v in acyclic.vertices():
        if acyclic.is_sink(v) or acyclic.is_source(v):
            sources.add(mutate(acyclic, v))
    assert len(sources) == 3
    distance = {q: 0 for q in sources}
    frontier = list(sources)
    d = 0
    counts = {0: len(sources)}
    while d < max_distance:
        d += 1
        nxt = []
        for q in frontier:
            for v in q.vertices():
                neighbor = mutate(q, v)
                if neighbor not in distance:
                    distance[neighbor] = d
                    nxt.append(neighbor)
        counts[d] = len(nxt)
        frontier = nxt
    counts["acyclic_total"] = sum(1 for q in distance if q.is_acyclic())
    return counts


@pytest.fixture
def example_core_quiver() -> Quiver:
    """The 4-vertex acyclic core used by the worked long-cycle example."""
    return make_quiver(
        4, {(1, 2): 3, (1, 3): 6, (1, 4): 5, (2, 3): 8, (2, 4): 7, (3, 4): 4}
    )
