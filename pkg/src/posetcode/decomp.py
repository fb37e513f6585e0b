"""Pointed partitions, code decompositions and order-canonical forms.

Canonicalization works with the moves available to weight-preserving
maps: every column may absorb any combination of the columns strictly
above it in the order.  Coset passes zero whatever can be zeroed;
an exact search then re-chooses representatives wherever that lets a
component fall apart into pieces with independent spans.  Every move is
accumulated into a witness matrix carrying the input code onto the
output code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .field import PrimeField
from .linear import (
    Code,
    Matrix,
    is_generalized_rref,
    p_weight,
    row_reduce_inverse,
)
from .poset import Poset


@dataclass(frozen=True)
class PointedPartition:
    """A partition of {1, ..., n} with a distinguished, possibly empty part."""

    n: int
    pointer: frozenset[int]
    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen = set(self.pointer)
        for part in self.parts:
            if not part:
                raise ValueError("parts other than the pointer must be nonempty")
            if part & seen:
                raise ValueError("pointer and parts must be pairwise disjoint")
            seen |= part
        if seen != set(range(1, self.n + 1)):
            raise ValueError(f"pointer and parts must partition [1, {self.n}]")


def is_partition_refinement(fine: PointedPartition, coarse: PointedPartition) -> bool:
    """Whether `fine` is reachable from `coarse` by part splits and
    single-element moves into the pointer.

    Equivalently: the pointer only grows, every fine part sits inside
    one coarse part, and no coarse part is absorbed into the pointer
    entirely (a move must leave its source part nonempty).
    """
    if fine.n != coarse.n:
        raise ValueError(f"ground-set mismatch: {fine.n} vs {coarse.n}")
    if not coarse.pointer <= fine.pointer:
        return False
    for part in fine.parts:
        if not any(part <= cp for cp in coarse.parts):
            return False
    for cp in coarse.parts:
        if not any(fp <= cp for fp in fine.parts):
            return False
    return True


@dataclass(frozen=True)
class Decomposition:
    """A code split into components with pairwise disjoint supports.

    `pointer_support` collects the coordinates on which no codeword is
    nonzero; together with the component supports it partitions the
    coordinate set.
    """

    code: Code
    components: tuple[Code, ...]
    pointer_support: frozenset[int]

    def __post_init__(self):
        seen: set[int] = set(self.pointer_support)
        for comp in self.components:
            supp = comp.support()
            if supp & seen:
                raise ValueError("component supports must be pairwise disjoint")
            seen |= supp
        if seen != set(range(1, self.code.n + 1)):
            raise ValueError("supports and pointer must partition the coordinate set")

    def partition(self) -> PointedPartition:
        return PointedPartition(
            self.code.n,
            self.pointer_support,
            tuple(comp.support() for comp in self.components),
        )


@dataclass(frozen=True)
class Profile:
    """Support sizes and dimensions: (n0, k0) for the pointer part, then
    (n_i, k_i) per component."""

    entries: tuple[tuple[int, int], ...]

    @property
    def pointer_entry(self) -> tuple[int, int]:
        return self.entries[0]

    @property
    def component_entries(self) -> tuple[tuple[int, int], ...]:
        return self.entries[1:]

    def matches_up_to_order(self, other: "Profile") -> bool:
        return self.pointer_entry == other.pointer_entry and sorted(
            self.component_entries
        ) == sorted(other.component_entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class PDecomposition:
    """A decomposition of a weight-equivalent code, with the witness map.

    `witness` is the n x n matrix of the weight-preserving linear map
    (columns hold basis-vector images) sending the original code onto
    the decomposed one.
    """

    original: Code
    decomposition: Decomposition
    witness: Matrix


def _row_support_masks(rows: Sequence[Sequence[int]]) -> list[int]:
    masks = []
    for row in rows:
        mask = 0
        for i, c in enumerate(row):
            if c:
                mask |= 1 << i
        masks.append(mask)
    return masks


def _row_graph_groups(masks: Sequence[int]) -> list[list[int]]:
    """Connected components of the rows-share-a-column graph."""
    unassigned = set(range(len(masks)))
    groups: list[list[int]] = []
    while unassigned:
        seed = min(unassigned)
        group_mask = masks[seed]
        group = {seed}
        grew = True
        while grew:
            grew = False
            for r in sorted(unassigned - group):
                if masks[r] & group_mask:
                    group.add(r)
                    group_mask |= masks[r]
                    grew = True
        groups.append(sorted(group))
        unassigned -= group
    return groups


def components_from_matrix(g: Matrix) -> Decomposition:
    """The decomposition a generator matrix determines.

    Rows are grouped into connected components of the graph joining rows
    with intersecting supports; each group spans one component, and null
    columns form the pointer support.
    """
    if g.rank() != g.k:
        raise ValueError(f"rank deficiency: generator has rank {g.rank()} < {g.k} rows")
    masks = _row_support_masks(g.rows)
    groups = _row_graph_groups(masks)
    components = tuple(
        Code(Matrix(g.field, [g.rows[r] for r in group], n=g.n)) for group in groups
    )
    covered = 0
    for m in masks:
        covered |= m
    pointer = frozenset(i + 1 for i in range(g.n) if not covered >> i & 1)
    return Decomposition(Code(g), components, pointer)


def _coset_reduce(
    field: PrimeField,
    col: list[int],
    indexed_cols: Sequence[tuple[int, list[int]]],
) -> tuple[list[int], dict[int, int]]:
    """Canonical representative of col modulo the span of the given columns.

    The spanning columns are echelonized with smallest-row-index pivots;
    the returned dict gives coefficients x_j with
    new_col = col - sum_j x_j * column_j.
    """
    p = field.p
    basis: list[tuple[int, list[int], dict[int, int]]] = []
    for j, raw in indexed_cols:
        vec = list(raw)
        combo = {j: 1}
        for t, b, bc in basis:
            if vec[t]:
                f = vec[t]
                vec = [(a - f * x) % p for a, x in zip(vec, b)]
                for jj, c in bc.items():
                    combo[jj] = (combo.get(jj, 0) - f * c) % p
        pivot = next((t for t, a in enumerate(vec) if a), None)
        if pivot is None:
            continue
        inv = field.inv(vec[pivot])
        vec = [a * inv % p for a in vec]
        combo = {jj: c * inv % p for jj, c in combo.items()}
        for idx, (t, b, bc) in enumerate(basis):
            if b[pivot]:
                f = b[pivot]
                new_b = [(a - f * x) % p for a, x in zip(b, vec)]
                new_bc = dict(bc)
                for jj, c in combo.items():
                    new_bc[jj] = (new_bc.get(jj, 0) - f * c) % p
                basis[idx] = (t, new_b, new_bc)
        basis.append((pivot, vec, combo))
    out = list(col)
    used: dict[int, int] = {}
    for t, b, bc in basis:
        if out[t]:
            f = out[t]
            out = [(a - f * x) % p for a, x in zip(out, b)]
            for jj, c in bc.items():
                used[jj] = (used.get(jj, 0) + f * c) % p
    used = {jj: c for jj, c in used.items() if c}
    return out, used


def _strict_ups(poset: Poset) -> list[list[int]]:
    """For each 0-indexed column r, the 0-indexed columns strictly above it."""
    return [
        sorted(j - 1 for j in range(1, poset.n + 1) if poset.strictly_less(r + 1, j))
        for r in range(poset.n)
    ]


class _Canonicalizer:
    """Carries the working rows and the accumulated witness map.

    Two kinds of weight-preserving moves are applied.  Coset passes
    replace each column by the canonical representative of its coset
    modulo the span of the columns strictly above it (zeroing every
    column that can be zeroed).  Split moves re-choose representatives
    inside one component so that its columns fall apart into sets with
    independent spans; those are found by an exact search, since coset
    passes alone can stop short of the finest reachable decomposition.
    """

    def __init__(self, g: Matrix, poset: Poset):
        self.field = g.field
        self.p = g.field.p
        self.n, self.k = g.n, g.k
        self.poset = poset
        self.ups = _strict_ups(poset)
        self.rows = [list(r) for r in row_reduce_inverse(g).rows]
        self.witness = [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]

    def column(self, j: int) -> list[int]:
        return [self.rows[i][j] for i in range(self.k)]

    def score(self) -> int:
        """Component count plus null-column count; the degree up to a
        constant depending only on the original code."""
        masks = _row_support_masks(self.rows)
        covered = 0
        for m in masks:
            covered |= m
        nulls = self.n - bin(covered).count("1")
        return len(_row_graph_groups(masks)) + nulls

    def snapshot(self) -> tuple[list[list[int]], list[list[int]]]:
        return [r[:] for r in self.rows], [r[:] for r in self.witness]

    def restore(self, snap) -> None:
        self.rows = [r[:] for r in snap[0]]
        self.witness = [r[:] for r in snap[1]]

    def _witness_add_row(self, r: int, j: int, coeff: int) -> None:
        # accumulate T(e_j) = e_j + coeff * e_r on the witness
        wr, wj = self.witness[r], self.witness[j]
        for t in range(self.n):
            wr[t] = (wr[t] + coeff * wj[t]) % self.p

    def coset_passes(self) -> None:
        """Right-to-left column reduction, re-reducing rows between
        passes, until a pass changes nothing or a matrix repeats.

        The representative rule and the row reduction can chase each
        other in a cycle; a repeated matrix presents the same code, and
        the accumulated witness remains valid for it, so the first
        repeat is a sound deterministic stopping point.
        """
        seen: set[tuple[tuple[int, ...], ...]] = set()
        while True:
            key = tuple(tuple(r) for r in self.rows)
            if key in seen:
                return
            seen.add(key)
            changed = False
            for r in range(self.n - 1, -1, -1):
                above = self.ups[r]
                if not above:
                    continue
                col = self.column(r)
                new_col, combo = _coset_reduce(
                    self.field, col, [(j, self.column(j)) for j in above]
                )
                if new_col != col:
                    changed = True
                    for i in range(self.k):
                        self.rows[i][r] = new_col[i]
                    for j, x in combo.items():
                        self._witness_add_row(r, j, -x)
            self.rows = [
                list(r)
                for r in row_reduce_inverse(Matrix(self.field, self.rows, n=self.n)).rows
            ]
            if not changed:
                return

    def apply_split(self, choices: dict[int, dict[int, int]]) -> None:
        """Replace the chosen columns simultaneously; choices[r] maps
        source columns j above r to coefficients x with
        new col_r = col_r + sum x * col_j."""
        originals = {r: self.column(r) for r in choices}
        sources = {j for combo in choices.values() for j in combo}
        originals.update({j: self.column(j) for j in sources})
        new_witness_rows = {}
        for r, combo in choices.items():
            col = originals[r][:]
            for j, x in combo.items():
                src = originals[j]
                for i in range(self.k):
                    col[i] = (col[i] + x * src[i]) % self.p
            for i in range(self.k):
                self.rows[i][r] = col[i]
            wr = self.witness[r][:]
            for j, x in combo.items():
                wj = self.witness[j]
                for t in range(self.n):
                    wr[t] = (wr[t] + x * wj[t]) % self.p
            new_witness_rows[r] = wr
        for r, wr in new_witness_rows.items():
            self.witness[r] = wr
        self.rows = [list(r) for r in row_reduce_inverse(Matrix(self.field, self.rows, n=self.n)).rows]

    def find_split(self) -> dict[int, dict[int, int]] | None:
        """Search every current component for a reachable two-way split.

        Representatives may be re-chosen within a component (columns may
        only absorb columns strictly above them inside the same
        component's support); a split is a side assignment whose two
        span sets stay independent.  Exact but worst-case exponential in
        the component dimension; fine at the scales this library
        targets.
        """
        masks = _row_support_masks(self.rows)
        for group in _row_graph_groups(masks):
            if len(group) < 2:
                continue  # a one-dimensional component never splits
            support_mask = 0
            for r in group:
                support_mask |= masks[r]
            support = [j for j in range(self.n) if support_mask >> j & 1]
            result = self._split_component(support)
            if result is not None:
                return result
        return None

    def _split_component(self, support: list[int]) -> dict[int, dict[int, int]] | None:
        support_set = set(support)
        heights = self.poset.heights()
        order = sorted(support, key=lambda j: (-heights[j], j))
        local_ups = {r: [j for j in self.ups[r] if j in support_set] for r in support}
        columns = {j: tuple(self.column(j)) for j in support}
        p, k = self.p, self.k

        def reduce_vec(vec: list[int], basis: list[tuple[int, tuple[int, ...]]]) -> list[int]:
            for pivot, b in basis:
                if vec[pivot]:
                    f = vec[pivot]
                    vec = [(a - f * x) % p for a, x in zip(vec, b)]
            return vec

        def extend(basis, vec):
            """Echelon basis plus one vector; None if vec is dependent."""
            red = reduce_vec(list(vec), basis)
            pivot = next((t for t, a in enumerate(red) if a), None)
            if pivot is None:
                return None
            inv = self.field.inv(red[pivot])
            red = tuple(a * inv % p for a in red)
            out = []
            for pv, b in basis:
                if b[pivot]:
                    f = b[pivot]
                    out.append((pv, tuple((a - f * x) % p for a, x in zip(b, red))))
                else:
                    out.append((pv, b))
            out.append((pivot, red))
            out.sort()
            return out

        def basis_key(basis):
            return tuple(b for _, b in basis)

        seen: set = set()
        # state: (position, side bases, combined basis, per-side use flags)
        stack = [(0, [], [], [], ({}, {}), (False, False))]
        # each stack entry: (idx, basis1, basis2, combined, choices-per-side, used)
        while stack:
            idx, b1, b2, comb, choices, used = stack.pop()
            if idx == len(order):
                if used[0] and used[1]:
                    merged = {}
                    merged.update(choices[0])
                    merged.update(choices[1])
                    return {r: combo for r, (combo, _h) in merged.items() if combo}
                continue
            key = (idx, basis_key(b1), basis_key(b2), used)
            if key in seen:
                continue
            seen.add(key)
            r = order[idx]
            sources = local_ups[r]
            g_r = columns[r]
            candidates: list[tuple[tuple[int, ...], dict[int, int]]] = []
            for coeffs in itertools.product(range(p), repeat=len(sources)):
                h = list(g_r)
                for j, x in zip(sources, coeffs):
                    if x:
                        src = columns[j]
                        for i in range(k):
                            h[i] = (h[i] + x * src[i]) % p
                if any(h):
                    candidates.append((tuple(h), {j: x for j, x in zip(sources, coeffs) if x}))
            sides = (0,) if idx == 0 else (0, 1)
            for side in sides:
                own = b1 if side == 0 else b2
                seen_spans = set()
                for h, combo in candidates:
                    red_own = reduce_vec(list(h), own)
                    if not any(red_own):
                        new_own = own
                    else:
                        ext_comb = extend(comb, h)
                        if ext_comb is None:
                            continue  # would intersect the other side
                        new_own = extend(own, h)
                        span_id = basis_key(new_own)
                        if span_id in seen_spans:
                            continue
                        seen_spans.add(span_id)
                        new_choices = (dict(choices[0]), dict(choices[1]))
                        new_choices[side][r] = (combo, h)
                        new_used = (used[0] or side == 0, used[1] or side == 1)
                        new_comb = ext_comb
                        stack.append((idx + 1, new_own if side == 0 else b1,
                                      new_own if side == 1 else b2,
                                      new_comb, new_choices, new_used))
                        continue
                    # span unchanged on its own side: combined is unchanged too
                    new_choices = (dict(choices[0]), dict(choices[1]))
                    new_choices[side][r] = (combo, h)
                    new_used = (used[0] or side == 0, used[1] or side == 1)
                    stack.append((idx + 1, own if side == 0 else b1,
                                  own if side == 1 else b2,
                                  comb, new_choices, new_used))
        return None


def canonical_form(g: Matrix, poset: Poset) -> tuple[Matrix, Matrix]:
    """Reduce a generator matrix to a canonical maximal-decomposition
    presentation of a weight-equivalent code.

    Column coset passes zero everything that can be zeroed; an exact
    per-component search then re-chooses representatives wherever that
    makes a component fall apart, and the passes repeat.  The returned
    matrix is in right-most-pivot reduced form; the second value is the
    witness map carrying the input's row space onto the output's.
    """
    if poset.n != g.n:
        raise ValueError(f"poset ground set {poset.n} does not match matrix width {g.n}")
    state = _Canonicalizer(g, poset)
    state.coset_passes()
    for _ in range(state.n + 2):
        before = state.score()
        snap = state.snapshot()
        state.coset_passes()
        if state.score() < before:
            state.restore(snap)
        split = state.find_split()
        if split is None:
            break
        before = state.score()
        state.apply_split(split)
        if state.score() <= before:
            raise RuntimeError("split application did not refine the decomposition")
    else:
        raise RuntimeError("decomposition refinement did not settle")
    return (
        Matrix(state.field, state.rows, n=state.n),
        Matrix(state.field, state.witness),
    )


def is_p_canonical(g: Matrix, poset: Poset) -> bool:
    """Fixpoint predicate: permuted-echelon form and no column movable.

    True when the matrix is in generalized right-most-pivot reduced form
    and every column already equals the canonical representative of its
    coset modulo the span of the columns strictly above it.
    """
    if poset.n != g.n:
        raise ValueError(f"poset ground set {poset.n} does not match matrix width {g.n}")
    if not is_generalized_rref(g):
        return False
    k = g.k
    rows = [list(r) for r in g.rows]
    for r, above in enumerate(_strict_ups(poset)):
        if not above:
            continue
        col = [rows[i][r] for i in range(k)]
        new_col, _ = _coset_reduce(
            g.field, col, [(j, [rows[i][j] for i in range(k)]) for j in above]
        )
        if new_col != col:
            return False
    return True


def maximal_p_decomposition(code: Code, poset: Poset) -> PDecomposition:
    """Canonicalize the generator and decompose the resulting matrix."""
    gstar, witness = canonical_form(code.gen, poset)
    decomposition = components_from_matrix(gstar)
    return PDecomposition(original=code, decomposition=decomposition, witness=witness)


def profile(d: Decomposition) -> Profile:
    """Support sizes and dimensions, pointer entry first."""
    entries = [(len(d.pointer_support), len(d.pointer_support))]
    entries.extend((len(comp.support()), comp.k) for comp in d.components)
    return Profile(tuple(entries))


def degree(pd: PDecomposition) -> int:
    """Number of refinement steps separating this from a trivial split:
    (r - 1) plus the growth of the pointer support over the original."""
    r = len(pd.decomposition.components)
    original_null = pd.original.n - len(pd.original.support())
    return (r - 1) + len(pd.decomposition.pointer_support) - original_null


def max_degree(code: Code, poset: Poset) -> int:
    return degree(maximal_p_decomposition(code, poset))


def witness_in_reducing_group(witness: Matrix, poset: Poset) -> bool:
    """Structural membership test for accumulated witnesses: every basis
    image e_j maps into span{e_i : i <= j} with a nonzero e_j part."""
    if witness.k != witness.n or witness.n != poset.n:
        return False
    for j in range(witness.n):
        if not witness.rows[j][j]:
            return False
        for i in range(witness.n):
            if witness.rows[i][j] and not poset.leq(i + 1, j + 1):
                return False
    return True


def validate_p_decomposition(pd: PDecomposition, poset: Poset) -> None:
    """Check the witness is invertible, weight-preserving on the original
    generators, and carries the original code onto the decomposed one."""
    w = pd.witness
    if w.k != w.n or w.n != pd.original.n:
        raise ValueError("witness must be square of the code length")
    if w.rank() != w.n:
        raise ValueError("witness is singular")
    transformed = w.apply_to_rows(pd.original.gen)
    target = pd.decomposition.code
    for orig_row, image in zip(pd.original.gen.row_vectors(), transformed.row_vectors()):
        if p_weight(orig_row, poset) != p_weight(image, poset):
            raise ValueError("witness does not preserve weights on the generators")
        if not target.contains(image):
            raise ValueError("witness does not map the code onto the decomposition")
    if transformed.rank() != pd.original.k:
        raise ValueError("witness collapses the code")
