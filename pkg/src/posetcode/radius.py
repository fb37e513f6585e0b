"""Exact packing radius by exhaustion, and hierarchical-neighbor bounds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .budget import DEFAULT_BUDGET, check_budget
from .decomp import maximal_p_decomposition
from .linear import Code, Vector
from .poset import Poset, lower_neighbor, upper_neighbor


@dataclass(frozen=True)
class RadiusBounds:
    lower: int
    upper: int
    exact: int | None = None

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError("exact value must lie between the bounds")


def packing_radius_exact(code: Code, poset: Poset, budget: int = DEFAULT_BUDGET) -> int:
    """Largest r such that radius-r balls around codewords are disjoint.

    By translation invariance this is one less than the smallest, over
    nonzero codewords c, of min over all x of max(w(x), w(x - c)); the
    inner minimum is found by scanning the whole ambient space.
    """
    if poset.n != code.n:
        raise ValueError(f"poset ground set {poset.n} does not match code length {code.n}")
    q, n = code.q, code.n
    check_budget("packing radius exhaustion", q**n, budget)
    check_budget("packing radius codeword enumeration", q**code.k, budget)

    weights = _ambient_weights(poset, q, n)
    best: int | None = None
    if q == 2:
        cw_masks = [c.support_mask() for c in code.codewords(budget) if not c.is_zero()]
        if not cw_masks:
            raise ValueError("zero-dimensional code has no packing radius")
        for cmask in cw_masks:
            meet = min(max(weights[x], weights[x ^ cmask]) for x in range(1 << n))
            if best is None or meet < best:
                best = meet
    else:
        space = [v for v in _ambient_vectors(code, n)]
        for c in code.codewords(budget):
            if c.is_zero():
                continue
            meet = min(
                max(weights[x.support_mask()], weights[(x - c).support_mask()])
                for x in space
            )
            if best is None or meet < best:
                best = meet
    if best is None:
        raise ValueError("zero-dimensional code has no packing radius")
    return best - 1


def _ambient_weights(poset: Poset, q: int, n: int) -> list[int]:
    """Weight of every support mask, indexed by mask."""
    return [bin(poset.ideal_mask(m)).count("1") for m in range(1 << n)]


def _ambient_vectors(code: Code, n: int):
    for coords in itertools.product(range(code.q), repeat=n):
        yield Vector(code.field, coords)


def packing_radius_bounds(
    code: Code,
    poset: Poset,
    budget: int = DEFAULT_BUDGET,
    with_exact: bool = True,
) -> RadiusBounds:
    """Bracket the packing radius between its hierarchical neighbors.

    The lower bound evaluates the whole code under the lower neighbor;
    the upper bound is the smallest upper-neighbor radius over the
    components of the maximal decomposition.
    """
    lower = packing_radius_exact(code, lower_neighbor(poset), budget)
    up = upper_neighbor(poset)
    pd = maximal_p_decomposition(code, poset)
    upper = min(
        packing_radius_exact(comp, up, budget) for comp in pd.decomposition.components
    )
    exact = packing_radius_exact(code, poset, budget) if with_exact else None
    return RadiusBounds(lower=lower, upper=upper, exact=exact)
