"""Syndrome decoding: full lookup table, support projection, independent
and hierarchically ordered component groups, and the two leveled
decoders with their table-size accounting."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field
from typing import Callable, Mapping

from .budget import DEFAULT_BUDGET, check_budget
from .decomp import Decomposition, maximal_p_decomposition
from .linear import (
    Code,
    Matrix,
    Vector,
    classical_rref,
    invert_matrix,
    p_weight,
)
from .poset import Poset


def parity_check(code: Code) -> Matrix:
    """A full-rank (n-k) x n matrix whose kernel is the code."""
    rref, pivots = classical_rref(code.gen)
    p = code.field.p
    pivot_set = set(pivots)
    free_cols = [j for j in range(code.n) if j not in pivot_set]
    rows = []
    for f in free_cols:
        vec = [0] * code.n
        vec[f] = 1
        for i, piv in enumerate(pivots):
            vec[piv] = (-rref.rows[i][f]) % p
        rows.append(vec)
    return Matrix(code.field, rows, n=code.n)


@dataclass(frozen=True)
class SyndromeTable:
    """Coset leaders keyed by syndrome.

    Leaders have minimal weight within their coset; ties are broken by
    the lexicographic order on coordinate residues, so tables are
    reproducible.  `poset` is set when the weight is a plain order
    weight on the table's own coordinates; group tables inside a decode
    plan instead carry a pulled-back weight function.
    """

    code: Code
    parity: Matrix
    leaders: Mapping[tuple[int, ...], Vector]
    poset: Poset | None = None
    weight: Callable[[Vector], int] | None = dataclass_field(default=None, repr=False)

    def syndrome(self, y: Vector) -> tuple[int, ...]:
        if len(y) != self.code.n:
            raise ValueError(f"vector length {len(y)} does not match code length {self.code.n}")
        p = self.code.field.p
        return tuple(
            sum(h * c for h, c in zip(row, y.coords)) % p for row in self.parity.rows
        )

    def decode(self, y: Vector) -> Vector:
        return y - self.leaders[self.syndrome(y)]


def _build_table(
    code: Code,
    weight: Callable[[Vector], int],
    budget: int,
    poset: Poset | None = None,
) -> SyndromeTable:
    q, n, k = code.q, code.n, code.k
    check_budget("syndrome table size", q ** (n - k), budget)
    check_budget("syndrome table enumeration", q**n, budget)
    parity = parity_check(code)
    p = code.field.p
    leaders: dict[tuple[int, ...], tuple[int, Vector]] = {}
    for coords in itertools.product(range(q), repeat=n):
        v = Vector(code.field, coords)
        s = tuple(sum(h * c for h, c in zip(row, coords)) % p for row in parity.rows)
        w = weight(v)
        best = leaders.get(s)
        if best is None or w < best[0]:
            leaders[s] = (w, v)
    return SyndromeTable(
        code=code,
        parity=parity,
        leaders={s: v for s, (w, v) in leaders.items()},
        poset=poset,
        weight=weight,
    )


def build_table(code: Code, poset: Poset, budget: int = DEFAULT_BUDGET) -> SyndromeTable:
    """Complete coset-leader table for the code under the order weight."""
    if poset.n != code.n:
        raise ValueError(f"poset ground set {poset.n} does not match code length {code.n}")
    return _build_table(code, lambda v: p_weight(v, poset), budget, poset=poset)


def decode_full(table: SyndromeTable, y: Vector) -> Vector:
    """Subtract the coset leader of y's syndrome; the result is a nearest
    codeword under the table's weight."""
    return table.decode(y)


def project(code: Code, y: Vector) -> Vector:
    """Coordinates of y on the support of the code, in ascending index order."""
    return project_support(sorted(code.support()), y)


def project_support(support: list[int], y: Vector) -> Vector:
    return Vector(y.field, (y.coords[i - 1] for i in support))


def unproject_support(support: list[int], n: int, v: Vector) -> Vector:
    """Place v's coordinates at the given positions, zeros elsewhere."""
    coords = [0] * n
    for pos, c in zip(support, v.coords):
        coords[pos - 1] = c
    return Vector(v.field, coords)


def independent_groups(d: Decomposition, poset: Poset) -> tuple[tuple[int, ...], ...]:
    """Partition of component indices into groups whose generated ideals
    are pairwise disjoint; decoding separates exactly across groups."""
    ideals = [
        poset.ideal_mask(_support_mask(comp.support())) for comp in d.components
    ]
    r = len(ideals)
    unassigned = set(range(r))
    groups = []
    while unassigned:
        seed = min(unassigned)
        group = {seed}
        mask = ideals[seed]
        grew = True
        while grew:
            grew = False
            for i in sorted(unassigned - group):
                if ideals[i] & mask:
                    group.add(i)
                    mask |= ideals[i]
                    grew = True
        groups.append(tuple(sorted(group)))
        unassigned -= group
    return tuple(groups)


def _support_mask(supp: frozenset[int]) -> int:
    mask = 0
    for i in supp:
        mask |= 1 << (i - 1)
    return mask


def hierarchical_groups(d: Decomposition, poset: Poset) -> tuple[tuple[int, ...], ...]:
    """Finest ordered partition of component indices whose consecutive
    support unions are hierarchically related, lowest group first.

    Computed from the nested complete cuts of the strictly-below
    relation between whole component supports.
    """
    supports = [sorted(comp.support()) for comp in d.components]
    r = len(supports)
    below = [
        [
            all(poset.strictly_less(a, b) for a in supports[i] for b in supports[j])
            for j in range(r)
        ]
        for i in range(r)
    ]
    above_count = [sum(below[i]) for i in range(r)]
    cuts = []
    for size in range(r + 1):
        cand = [i for i in range(r) if above_count[i] >= r - size]
        if len(cand) != size:
            continue
        cand_set = set(cand)
        if all(below[i][j] for i in cand for j in range(r) if j not in cand_set):
            cuts.append(cand_set)
    cuts.sort(key=len)
    groups = []
    prev: set[int] = set()
    for cut in cuts:
        diff = cut - prev
        if diff:
            groups.append(tuple(sorted(diff)))
        prev = cut
    return tuple(groups)


@dataclass(frozen=True)
class PlanGroup:
    """One ordered group of components with its projected code and table."""

    indices: tuple[int, ...]
    support: tuple[int, ...]
    code: Code
    table: SyndromeTable


@dataclass(frozen=True)
class DecodePlan:
    """Per-group syndrome tables over an ordered, hierarchically related
    grouping of decomposition components.

    When the decomposition describes a transformed image of the code
    actually being decoded, `to_decomposed` carries received words into
    the decomposed domain and `from_decomposed` carries decoded words
    back; both are absent for plans decoding the decomposition's own
    code.  The maps preserve the order weight, so distances agree in
    both domains.
    """

    decomposition: Decomposition
    poset: Poset
    pointer_support: frozenset[int]
    groups: tuple[PlanGroup, ...]
    to_decomposed: Matrix | None = None
    from_decomposed: Matrix | None = None

    @property
    def n(self) -> int:
        return self.decomposition.code.n

    def _inward(self, y: Vector) -> Vector:
        return y if self.to_decomposed is None else _apply(self.to_decomposed, y)

    def _outward(self, c: Vector) -> Vector:
        return c if self.from_decomposed is None else _apply(self.from_decomposed, c)


def _apply(m: Matrix, v: Vector) -> Vector:
    p = m.field.p
    return Vector(
        m.field,
        (sum(row[j] * c for j, c in enumerate(v.coords) if c) % p for row in m.rows),
    )


def build_plan(
    d: Decomposition,
    poset: Poset,
    budget: int = DEFAULT_BUDGET,
    witness: Matrix | None = None,
) -> DecodePlan:
    """Group the components hierarchically and build one table per group.

    Group tables decode in the projected coordinates; leader weights are
    evaluated by pulling vectors back to the full space with zeros on
    the dropped coordinates.  `witness`, when given, is the weight-
    preserving map carrying the code to be decoded onto the
    decomposition's code.
    """
    if poset.n != d.code.n:
        raise ValueError(f"poset ground set {poset.n} does not match code length {d.code.n}")
    n = d.code.n
    plan_groups = []
    for indices in hierarchical_groups(d, poset):
        supp: set[int] = set()
        rows = []
        for i in indices:
            comp = d.components[i]
            supp |= comp.support()
            rows.extend(comp.gen.rows)
        support_list = sorted(supp)
        projected = Code(
            Matrix(d.code.field, [[row[i - 1] for i in support_list] for row in rows])
        )

        def pulled_back_weight(v: Vector, _s=tuple(support_list)) -> int:
            return p_weight(unproject_support(list(_s), n, v), poset)

        table = _build_table(projected, pulled_back_weight, budget)
        plan_groups.append(
            PlanGroup(
                indices=indices,
                support=tuple(support_list),
                code=projected,
                table=table,
            )
        )
    return DecodePlan(
        decomposition=d,
        poset=poset,
        pointer_support=d.pointer_support,
        groups=tuple(plan_groups),
        to_decomposed=witness,
        from_decomposed=None if witness is None else invert_matrix(witness),
    )


def build_plan_for_code(code: Code, poset: Poset, budget: int = DEFAULT_BUDGET) -> DecodePlan:
    """Decode plan for the code over its maximal decomposition.

    The decomposition lives on a weight-equivalent image of the code;
    the plan carries the witness so decoding round-trips through the
    decomposed domain."""
    pd = maximal_p_decomposition(code, poset)
    return build_plan(pd.decomposition, poset, budget, witness=pd.witness)


def decode_leveled_alg1(plan: DecodePlan, y: Vector) -> Vector:
    """Syndrome-decode every group's projection and reassemble.

    In the decomposed domain, coordinates outside the component supports
    are ignored and the output is zero there.
    """
    n = plan.n
    y = plan._inward(y)
    out = Vector(y.field, [0] * n)
    for group in plan.groups:
        block = project_support(list(group.support), y)
        decoded = group.table.decode(block)
        out = out + unproject_support(list(group.support), n, decoded)
    return plan._outward(out)


def decode_leveled_alg2(plan: DecodePlan, y: Vector) -> Vector:
    """Scan groups from the highest down; keep blocks that are codewords
    of their group, syndrome-decode the first erroneous block, and
    leave zeros on all groups below it."""
    n = plan.n
    y = plan._inward(y)
    out = Vector(y.field, [0] * n)
    for group in reversed(plan.groups):
        block = project_support(list(group.support), y)
        if any(group.table.syndrome(block)):
            decoded = group.table.decode(block)
            out = out + unproject_support(list(group.support), n, decoded)
            break
        out = out + unproject_support(list(group.support), n, block)
    return plan._outward(out)


def table_sizes(plan: DecodePlan) -> dict[str, int]:
    """Stored-entry accounting for the full, projected and leveled tables."""
    code = plan.decomposition.code
    q = code.q
    full = q ** (code.n - code.k)
    reduced = 1
    for comp in plan.decomposition.components:
        reduced *= q ** (len(comp.support()) - comp.k)
    group_sizes = []
    for group in plan.groups:
        size = 1
        for i in group.indices:
            comp = plan.decomposition.components[i]
            size *= q ** (len(comp.support()) - comp.k)
        group_sizes.append(size)
    return {
        "full": full,
        "reduced": reduced,
        "leveled_total": sum(group_sizes),
        "worst_single_lookup": max(group_sizes),
    }
