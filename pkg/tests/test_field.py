import itertools

import pytest
from hypothesis import given, strategies as st

from posetcode.field import PrimeField


def test_rejects_composite_and_out_of_range_characteristic():
    for bad in (0, 1, 4, 6, 9, 1 << 16, (1 << 16) + 1):
        with pytest.raises(ValueError):
            PrimeField(bad)


def test_accepts_primes():
    for p in (2, 3, 5, 7, 11, 65521):
        assert PrimeField(p).p == p


def test_addition_examples():
    f2, f5 = PrimeField(2), PrimeField(5)
    assert (f2.element(1) + f2.element(1)).value == 0
    assert (f5.element(3) + f5.element(4)).value == 2
    a = f5.element(3)
    assert (a + f5.zero()) == a


def test_inverse_examples():
    f2, f5, f7 = PrimeField(2), PrimeField(5), PrimeField(7)
    assert f2.element(1).inv().value == 1
    assert f5.element(2).inv().value == 3
    with pytest.raises(ZeroDivisionError):
        f7.element(0).inv()


def test_subtraction_negation_division():
    f7 = PrimeField(7)
    a, b = f7.element(2), f7.element(5)
    assert (a - b).value == 4
    assert (-a).value == 5
    assert ((a / b) * b) == a


def test_field_mismatch_rejected():
    a = PrimeField(3).element(1)
    b = PrimeField(5).element(1)
    with pytest.raises(ValueError):
        a + b


def test_from_int_normalizes():
    f5 = PrimeField(5)
    assert f5.from_int(12).value == 2
    assert f5.from_int(-1).value == 4


def test_elements_enumeration():
    f5 = PrimeField(5)
    assert [e.value for e in f5.elements()] == [0, 1, 2, 3, 4]
    assert f5.one().value == 1 and f5.zero().value == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_field_axioms_exhaustive(p):
    f = PrimeField(p)
    elems = list(f.elements())
    for a, b in itertools.product(elems, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.product(elems, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a in elems:
        if a.value:
            assert (a * a.inv()).value == 1


@given(st.sampled_from([2, 3, 5, 7, 11, 101]), st.integers(), st.integers())
def test_add_sub_roundtrip(p, x, y):
    f = PrimeField(p)
    a, b = f.from_int(x), f.from_int(y)
    assert (a + b) - b == a
    assert 0 <= (a + b).value < p


def test_elements_are_immutable():
    a = PrimeField(5).element(2)
    with pytest.raises(Exception):
        a.value = 3
    with pytest.raises(Exception):
        a.field.p = 7
