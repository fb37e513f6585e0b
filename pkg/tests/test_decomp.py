import itertools
import random

import pytest

from posetcode import oracle
from posetcode.field import PrimeField
from posetcode.linear import Code, Matrix, row_reduce_inverse
from posetcode.decomp import (
    PointedPartition,
    canonical_form,
    components_from_matrix,
    degree,
    is_p_canonical,
    is_partition_refinement,
    max_degree,
    maximal_p_decomposition,
    profile,
    validate_p_decomposition,
    witness_in_reducing_group,
)
from posetcode.poset import Poset, leq_poset, lower_neighbor, upper_neighbor
from posetcode.randgen import random_code, random_invertible, random_poset

F2 = PrimeField(2)

# 3x6 binary generator with published canonical forms under two orders
SIX_COL_G = Matrix(F2, [[0, 0, 1, 1, 0, 1], [1, 0, 1, 1, 1, 0], [1, 1, 0, 0, 0, 0]])
ORDER_A = Poset.from_relations(6, [(1, 2), (3, 4)])
ORDER_B = Poset.from_relations(6, [(1, 2), (3, 4), (4, 5)])
CANONICAL_A = ((0, 0, 0, 1, 0, 1), (1, 0, 0, 1, 1, 0), (0, 1, 0, 0, 0, 0))
CANONICAL_B = ((0, 0, 0, 1, 0, 1), (1, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 0))

# 3x5 matrices generating one code in two echelon presentations
FIVE_COL_CLASSICAL = Matrix(F2, [[1, 0, 0, 0, 0], [0, 1, 0, 1, 1], [0, 0, 1, 1, 0]])
FIVE_COL_INVERSE = Matrix(F2, [[0, 1, 1, 0, 1], [0, 0, 1, 1, 0], [1, 0, 0, 0, 0]])


def pp(n, pointer, parts):
    return PointedPartition(n, frozenset(pointer), tuple(frozenset(p) for p in parts))


class TestPointedPartition:
    def test_validation(self):
        pp(4, [1, 3], [[2], [4]])
        with pytest.raises(ValueError):
            pp(4, [1], [[2], [4]])  # 3 missing
        with pytest.raises(ValueError):
            pp(4, [1], [[2, 3], [3, 4]])  # overlap
        with pytest.raises(ValueError):
            pp(4, [1], [[2, 3, 4], []])  # empty part

    def test_refinement_examples(self):
        coarse = pp(4, [], [[1, 2, 3, 4]])
        fine = pp(4, [1, 3], [[2], [4]])
        assert is_partition_refinement(fine, coarse)
        assert is_partition_refinement(coarse, coarse)
        assert not is_partition_refinement(pp(2, [], [[1, 2]]), pp(2, [1], [[2]]))

    def test_whole_part_cannot_vanish_into_pointer(self):
        # moves into the pointer go one element at a time and must leave
        # their source part nonempty, so a part can never be absorbed
        coarse = pp(2, [], [[1], [2]])
        fine = pp(2, [1], [[2]])
        assert not is_partition_refinement(fine, coarse)

    def test_refinement_matches_step_reachability(self):
        n = 4
        partitions = list(_all_pointed_partitions(n))
        reach = {p: {p} for p in partitions}
        for p in partitions:
            for q in _one_step_refinements(p):
                reach[p].add(q)
        # transitive closure over 1-step moves
        changed = True
        while changed:
            changed = False
            for p in partitions:
                new = set()
                for q in reach[p]:
                    new |= reach[q]
                if not new <= reach[p]:
                    reach[p] |= new
                    changed = True
        for coarse in partitions:
            for fine in partitions:
                assert is_partition_refinement(fine, coarse) == (fine in reach[coarse])

    def test_ground_set_mismatch(self):
        with pytest.raises(ValueError):
            is_partition_refinement(pp(2, [], [[1, 2]]), pp(3, [], [[1, 2, 3]]))


def _all_pointed_partitions(n):
    def parts_of(elems):
        elems = list(elems)
        if not elems:
            yield []
            return
        first, rest = elems[0], elems[1:]
        for size in range(len(rest) + 1):
            for others in itertools.combinations(rest, size):
                block = frozenset((first,) + others)
                remaining = [x for x in rest if x not in others]
                for tail in parts_of(remaining):
                    yield [block] + tail

    universe = list(range(1, n + 1))
    for psize in range(n + 1):
        for pointer in itertools.combinations(universe, psize):
            rest = [x for x in universe if x not in pointer]
            for blocks in parts_of(rest):
                yield PointedPartition(n, frozenset(pointer), tuple(sorted(blocks, key=sorted)))


def _one_step_refinements(p: PointedPartition):
    for i, part in enumerate(p.parts):
        others = p.parts[:i] + p.parts[i + 1 :]
        if len(part) >= 2:
            elems = sorted(part)
            for size in range(1, len(elems)):
                for sub in itertools.combinations(elems, size):
                    a, b = frozenset(sub), part - frozenset(sub)
                    yield PointedPartition(
                        p.n, p.pointer, tuple(sorted(others + (a, b), key=sorted))
                    )
            for x in elems:
                yield PointedPartition(
                    p.n,
                    p.pointer | {x},
                    tuple(sorted(others + (part - {x},), key=sorted)),
                )


class TestComponents:
    def test_matches_printed_component_codes(self):
        d = components_from_matrix(FIVE_COL_CLASSICAL)
        sets = {frozenset(v.coords for v in comp.codewords()) for comp in d.components}
        assert sets == {
            frozenset({(0, 0, 0, 0, 0), (0, 1, 0, 1, 1), (0, 0, 1, 1, 0), (0, 1, 1, 0, 1)}),
            frozenset({(0, 0, 0, 0, 0), (1, 0, 0, 0, 0)}),
        }
        assert d.pointer_support == frozenset()

        d2 = components_from_matrix(FIVE_COL_INVERSE)
        sets2 = {frozenset(v.coords for v in comp.codewords()) for comp in d2.components}
        assert sets2 == {
            frozenset({(0, 0, 0, 0, 0), (0, 1, 1, 0, 1), (0, 0, 1, 1, 0), (0, 1, 0, 1, 1)}),
            frozenset({(0, 0, 0, 0, 0), (1, 0, 0, 0, 0)}),
        }

    def test_shared_column_keeps_rows_together(self):
        g = Matrix(F2, [[1, 1, 0], [1, 0, 1]])
        d = components_from_matrix(g)
        assert len(d.components) == 1

    def test_rank_deficiency_rejected(self):
        with pytest.raises(ValueError, match="rank"):
            components_from_matrix(Matrix(F2, [[1, 0], [1, 0]]))

    def test_null_columns_become_pointer(self):
        g = Matrix(F2, [[1, 0, 0, 1]])
        d = components_from_matrix(g)
        assert d.pointer_support == frozenset({2, 3})


class TestCanonicalForm:
    def test_first_order_fixture(self):
        gstar, witness = canonical_form(SIX_COL_G, ORDER_A)
        assert gstar.rows == CANONICAL_A
        assert is_p_canonical(gstar, ORDER_A)
        pd = maximal_p_decomposition(Code(SIX_COL_G), ORDER_A)
        assert list(profile(pd.decomposition)) == [(1, 1), (4, 2), (1, 1)]
        assert degree(pd) == 2
        validate_p_decomposition(pd, ORDER_A)

    def test_second_order_fixture(self):
        gstar, witness = canonical_form(SIX_COL_G, ORDER_B)
        assert gstar.rows == CANONICAL_B
        assert is_p_canonical(gstar, ORDER_B)
        pd = maximal_p_decomposition(Code(SIX_COL_G), ORDER_B)
        assert list(profile(pd.decomposition)) == [(1, 1), (2, 1), (2, 1), (1, 1)]
        assert degree(pd) == 3
        validate_p_decomposition(pd, ORDER_B)

    def test_fixture_degrees_are_the_brute_force_maxima(self):
        code = Code(SIX_COL_G)
        assert max_degree(code, ORDER_A) == oracle.brute_max_degree(code, ORDER_A)
        assert max_degree(code, ORDER_B) == oracle.brute_max_degree(code, ORDER_B)

    def test_antichain_reduces_rows_only(self):
        anti = Poset.antichain(6)
        gstar, witness = canonical_form(SIX_COL_G, anti)
        assert gstar == row_reduce_inverse(SIX_COL_G)
        assert witness == Matrix.identity(F2, 6)

    def test_split_requires_non_reducing_move(self):
        # even-weight code: the only improving move makes two columns
        # parallel rather than zeroing anything
        code = Code.from_rows(F2, [[1, 1, 0], [0, 1, 1]])
        p = Poset.from_relations(3, [(2, 3)])
        pd = maximal_p_decomposition(code, p)
        assert degree(pd) == 1 == oracle.brute_max_degree(code, p)
        validate_p_decomposition(pd, p)

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            canonical_form(SIX_COL_G, Poset.antichain(5))

    def test_witness_stays_in_reducing_group(self):
        rng = random.Random(21)
        for _ in range(25):
            n = rng.randint(2, 6)
            k = rng.randint(1, n)
            code = random_code(rng, F2, n, k)
            p = random_poset(rng, n)
            pd = maximal_p_decomposition(code, p)
            assert witness_in_reducing_group(pd.witness, p)
            validate_p_decomposition(pd, p)

    def test_oracle_agreement_small(self):
        rng = random.Random(31)
        for p in oracle.enum_posets(3):
            code = random_code(rng, F2, 3, rng.randint(1, 2))
            assert max_degree(code, p) == oracle.brute_max_degree(code, p)


class TestProfileAndDegree:
    def test_trivial_full_support_profile(self):
        g = Matrix(F2, [[1, 1, 1]])
        d = components_from_matrix(g)
        assert list(profile(d)) == [(0, 0), (3, 1)]

    def test_fixture_profiles(self):
        d = components_from_matrix(Matrix(F2, CANONICAL_B))
        assert list(profile(d)) == [(1, 1), (2, 1), (2, 1), (1, 1)]
        d2 = components_from_matrix(FIVE_COL_INVERSE)
        assert list(profile(d2)) == [(0, 0), (4, 2), (1, 1)]

    def test_profile_sums(self):
        rng = random.Random(41)
        for _ in range(30):
            n = rng.randint(2, 7)
            k = rng.randint(1, n)
            code = random_code(rng, F2, n, k)
            p = random_poset(rng, n)
            entries = list(profile(maximal_p_decomposition(code, p).decomposition))
            assert sum(ni for ni, _ in entries) == n
            assert sum(ki for _, ki in entries[1:]) == k

    def test_degree_of_trivial_decomposition_is_zero(self):
        code = Code.from_rows(F2, [[1, 1, 0, 1]])
        d = components_from_matrix(code.gen)
        pd = maximal_p_decomposition(code, Poset.antichain(4))
        assert degree(pd) == 0
        assert len(d.components) == 1

    def test_two_coordinate_codeword_degrees(self):
        # span{e_i + e_j}: nothing to gain when i and j are incomparable,
        # one aggregation when they are comparable
        code = Code.from_rows(F2, [[1, 0, 1]])
        incomparable = Poset.from_relations(3, [(2, 1), (2, 3)])
        assert max_degree(code, incomparable) == 0
        comparable = Poset.from_relations(3, [(1, 3)])
        assert max_degree(code, comparable) == 1
        assert oracle.brute_max_degree(code, incomparable) == 0
        assert oracle.brute_max_degree(code, comparable) == 1

    def test_profile_uniqueness_small_sweep(self):
        rng = random.Random(51)
        for _ in range(40):
            n = rng.randint(2, 6)
            k = rng.randint(1, n)
            code = random_code(rng, F2, n, k)
            p = random_poset(rng, n)
            base = profile(maximal_p_decomposition(code, p).decomposition)
            scrambled = Code(random_invertible(rng, F2, k) @ code.gen)
            assert base.matches_up_to_order(
                profile(maximal_p_decomposition(scrambled, p).decomposition)
            )
            iso = oracle.random_reducing_isometry(p, 2, rng)
            moved = Code(iso.apply_to_rows(code.gen))
            assert base.matches_up_to_order(
                profile(maximal_p_decomposition(moved, p).decomposition)
            )

    def test_degree_monotone_in_poset_order(self):
        rng = random.Random(61)
        checked = 0
        while checked < 30:
            n = rng.randint(2, 6)
            k = rng.randint(1, n)
            code = random_code(rng, F2, n, k)
            p = random_poset(rng, n, density=0.2)
            q = _extend_poset(rng, p)
            if q is None:
                continue
            checked += 1
            assert leq_poset(p, q)
            assert max_degree(code, p) <= max_degree(code, q)

    def test_hierarchical_neighbors_bracket_degree(self):
        rng = random.Random(71)
        for _ in range(30):
            n = rng.randint(2, 6)
            k = rng.randint(1, n)
            code = random_code(rng, F2, n, k)
            p = random_poset(rng, n)
            d = max_degree(code, p)
            assert max_degree(code, lower_neighbor(p)) <= d <= max_degree(code, upper_neighbor(p))

    def test_bracket_direction_is_forced_by_monotonicity(self):
        # one-relation order, two-coordinate codeword: the lower neighbor
        # (antichain) gives degree 0, the order itself already gives 1,
        # so brackets the other way around are impossible
        code = Code.from_rows(F2, [[1, 0, 1]])
        p = Poset.from_relations(3, [(1, 3)])
        assert max_degree(code, lower_neighbor(p)) == 0
        assert max_degree(code, p) == 1
        assert max_degree(code, upper_neighbor(p)) == 1

    def test_canonicalization_witness_also_preserves_larger_orders(self):
        # a witness produced under p acts by adding lower coordinates to
        # higher ones, so it is weight-preserving for any order extending p
        rng = random.Random(81)
        checked = 0
        while checked < 15:
            n = rng.randint(2, 5)
            k = rng.randint(1, n)
            code = random_code(rng, F2, n, k)
            p = random_poset(rng, n, density=0.2)
            q = _extend_poset(rng, p)
            if q is None:
                continue
            checked += 1
            pd = maximal_p_decomposition(code, p)
            assert witness_in_reducing_group(pd.witness, q)
            assert oracle.is_isometry(pd.witness, q)


def _extend_poset(rng, p):
    extra = [(a, b) for a in range(1, p.n + 1) for b in range(1, p.n + 1) if a != b]
    rng.shuffle(extra)
    for a, b in extra:
        try:
            q = Poset.from_relations(p.n, list(p.relations()) + [(a, b)])
        except ValueError:
            continue
        if q != p:
            return q
    return None
