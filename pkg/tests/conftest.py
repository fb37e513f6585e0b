"""Shared brute-force oracles used to cross-check library routines.

These deliberately re-derive everything from definitions, independent of
the code paths they validate.
"""

from __future__ import annotations

import itertools

from posetcode.field import PrimeField
from posetcode.linear import Code, Vector, p_distance
from posetcode.poset import Poset


def all_vectors(field: PrimeField, n: int) -> list[Vector]:
    return [Vector(field, c) for c in itertools.product(range(field.p), repeat=n)]


def brute_ideal(poset: Poset, seed: set[int]) -> set[int]:
    """Downward closure by repeated scanning of the relation."""
    closed = set(seed)
    grew = True
    while grew:
        grew = False
        for a in range(1, poset.n + 1):
            if a in closed:
                continue
            if any(poset.leq(a, b) for b in closed):
                closed.add(a)
                grew = True
    return closed


def brute_heights(poset: Poset) -> list[int]:
    """Longest-chain heights by enumerating all chains."""
    n = poset.n
    heights = [0] * n
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(1, n + 1), size):
            is_chain = all(
                poset.leq(a, b) or poset.leq(b, a) for a, b in itertools.combinations(subset, 2)
            )
            if not is_chain:
                continue
            top = max(subset, key=lambda a: sum(poset.leq(b, a) for b in subset))
            if all(poset.leq(b, top) for b in subset):
                heights[top - 1] = max(heights[top - 1], size)
    return heights


def brute_weight(v: Vector, poset: Poset) -> int:
    supp = {i + 1 for i, c in enumerate(v.coords) if c}
    return len(brute_ideal(poset, supp))


def brute_packing_radius(code: Code, poset: Poset) -> int:
    """Largest radius with pairwise disjoint balls, straight from the
    ball definition."""
    words = sorted(code.codeword_set(), key=lambda v: v.coords)
    space = all_vectors(code.field, code.n)
    r = -1
    while True:
        candidate = r + 1
        ok = True
        for i, c1 in enumerate(words):
            for c2 in words[i + 1 :]:
                ball1 = {x.coords for x in space if p_distance(x, c1, poset) <= candidate}
                if any(
                    x.coords in ball1
                    for x in space
                    if p_distance(x, c2, poset) <= candidate
                ):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            return r
        r = candidate
        if r > code.n:
            return code.n


def brute_nearest_distance(words, y: Vector, poset: Poset) -> int:
    return min(p_distance(y, c, poset) for c in words)
