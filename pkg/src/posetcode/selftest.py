"""Oracle-agreement suite behind the `selftest` command.

Each property pits a library routine against an independent brute-force
computation at tiny sizes and reports pass/fail.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable

from . import oracle
from .budget import DEFAULT_BUDGET
from .decomp import max_degree, maximal_p_decomposition, profile
from .decode import build_plan_for_code, build_table, decode_full, decode_leveled_alg1, decode_leveled_alg2, unproject_support
from .field import PrimeField
from .linear import Code, Matrix, Vector, min_distance, p_distance, p_weight
from .poset import Poset, leq_poset, lower_neighbor, upper_neighbor
from .radius import packing_radius_bounds, packing_radius_exact
from .randgen import random_code, random_invertible, random_poset


def _field_axioms() -> bool:
    for p in (2, 3, 5):
        f = PrimeField(p)
        elems = list(f.elements())
        for a in elems:
            if a.value and int(a * a.inv()) != 1:
                return False
            for b in elems:
                if int(a + b) != (a.value + b.value) % p:
                    return False
                for c in elems:
                    if (a + b) * c != a * c + b * c:
                        return False
                    if (a * b) * c != a * (b * c):
                        return False
    return True


def _neighbor_extremality() -> bool:
    # upper neighbor: minimal among hierarchical posets above; lower
    # neighbor: the maximum hierarchical poset below
    hier = list(oracle.enum_hierarchical(3))
    for poset in oracle.enum_posets(3):
        up = upper_neighbor(poset)
        lo = lower_neighbor(poset)
        if not (up.is_hierarchical() and lo.is_hierarchical()):
            return False
        if not (leq_poset(poset, up) and leq_poset(lo, poset)):
            return False
        for h in hier:
            if leq_poset(poset, h) and leq_poset(h, up) and h != up:
                return False
            if leq_poset(h, poset) and not leq_poset(h, lo):
                return False
    return True


def _degree_oracle_agreement(rng: random.Random) -> bool:
    f2 = PrimeField(2)
    for poset in oracle.enum_posets(3):
        for k in (1, 2):
            code = random_code(rng, f2, 3, k)
            if max_degree(code, poset) != oracle.brute_max_degree(code, poset):
                return False
    return True


def _isometry_group() -> bool:
    f2 = PrimeField(2)
    for poset in (
        Poset.chain(3),
        Poset.antichain(3),
        Poset.from_relations(3, [(1, 3)]),
    ):
        members = list(oracle.enum_gl_p(poset, 2))
        strict = len(poset.relations())
        auts = len(list(oracle.enum_aut(poset)))
        if len({m.matrix for m in members}) != (2 ** strict) * auts:
            return False
        if Matrix.identity(f2, 3) not in {m.matrix for m in members}:
            return False
        for iso in members:
            if not oracle.is_isometry(iso.matrix, poset):
                return False
    return True


def _decoder_optimality(rng: random.Random, budget: int) -> bool:
    f2 = PrimeField(2)
    for _ in range(4):
        n = rng.randint(3, 6)
        k = rng.randint(1, min(3, n))
        code = random_code(rng, f2, n, k)
        poset = random_poset(rng, n)
        table = build_table(code, poset, budget)
        plan = build_plan_for_code(code, poset, budget)
        words = code.codeword_set()
        comp_support = sorted(
            set().union(*(c.support() for c in plan.decomposition.components))
        )
        for coords in itertools.product(range(2), repeat=n):
            y = Vector(f2, coords)
            best = min(p_distance(y, c, poset) for c in words)
            if p_distance(y, decode_full(table, y), poset) != best:
                return False
        for coords in itertools.product(range(2), repeat=len(comp_support)):
            y = unproject_support(comp_support, n, Vector(f2, coords))
            best = min(p_distance(y, c, poset) for c in words)
            if p_distance(y, decode_leveled_alg1(plan, y), poset) != best:
                return False
            if p_distance(y, decode_leveled_alg2(plan, y), poset) != best:
                return False
    return True


def _profile_invariance(rng: random.Random) -> bool:
    f2 = PrimeField(2)
    for _ in range(10):
        n = rng.randint(2, 5)
        k = rng.randint(1, n)
        code = random_code(rng, f2, n, k)
        poset = random_poset(rng, n)
        base = profile(maximal_p_decomposition(code, poset).decomposition)
        scrambled = Code(random_invertible(rng, f2, k) @ code.gen)
        alt = profile(maximal_p_decomposition(scrambled, poset).decomposition)
        if not base.matches_up_to_order(alt):
            return False
        iso = oracle.random_reducing_isometry(poset, 2, rng)
        if iso.rank() == n:
            moved = Code(iso.apply_to_rows(code.gen))
            alt = profile(maximal_p_decomposition(moved, poset).decomposition)
            if not base.matches_up_to_order(alt):
                return False
    return True


def _radius_brackets(rng: random.Random, budget: int) -> bool:
    f2 = PrimeField(2)
    for _ in range(6):
        n = rng.randint(2, 6)
        k = rng.randint(1, min(3, n))
        code = random_code(rng, f2, n, k)
        poset = random_poset(rng, n)
        bounds = packing_radius_bounds(code, poset, budget)
        if not bounds.lower <= bounds.exact <= bounds.upper:
            return False
        hamming = packing_radius_exact(code, Poset.antichain(n), budget)
        if hamming != (min_distance(code, Poset.antichain(n)) - 1) // 2:
            return False
    return True


def _weight_is_a_weight(rng: random.Random) -> bool:
    f2 = PrimeField(2)
    for _ in range(5):
        n = rng.randint(2, 6)
        poset = random_poset(rng, n)
        vectors = [Vector(f2, coords) for coords in itertools.product(range(2), repeat=n)]
        for v in vectors:
            if (p_weight(v, poset) == 0) != v.is_zero():
                return False
            if p_weight(v, poset) != p_weight(-v, poset):
                return False
        for _ in range(40):
            u, v = rng.choice(vectors), rng.choice(vectors)
            if p_weight(u + v, poset) > p_weight(u, poset) + p_weight(v, poset):
                return False
    return True


def run_selftest(seed: int = 0, budget: int = DEFAULT_BUDGET) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    checks: list[tuple[str, Callable[[], bool]]] = [
        ("field-axioms", _field_axioms),
        ("weight-axioms", lambda: _weight_is_a_weight(rng)),
        ("neighbor-extremality", _neighbor_extremality),
        ("degree-oracle-agreement", lambda: _degree_oracle_agreement(rng)),
        ("isometry-group", _isometry_group),
        ("decoder-optimality", lambda: _decoder_optimality(rng, budget)),
        ("profile-invariance", lambda: _profile_invariance(rng)),
        ("radius-brackets", lambda: _radius_brackets(rng, budget)),
    ]
    return [(name, bool(fn())) for name, fn in checks]
