from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wreathhopf.scalars import (BaseMismatch, IntegersMod, LocalizedInt, ModScalar, NotInvertible,
                                Rationals, loc_add, mod_inverse, parse_ring)


def L(num, exp=0, k=3):
    return LocalizedInt(num, exp, k)


def test_add_examples():
    one = loc_add(L(1, 1), L(2, 1))
    assert one == L(1) and one.exponent == 0
    assert loc_add(L(1, 1), L(0)) == L(1, 1)
    assert loc_add(L(5, 2), L(1, 1)).to_fraction() == Fraction(8, 9)


def test_canonical_form():
    x = L(9, 2)
    assert (x.numerator, x.exponent) == (1, 0)
    assert L(6, 1).to_fraction() == 2
    assert L(1, -2).to_fraction() == 9


def test_base_mismatch():
    with pytest.raises(BaseMismatch):
        LocalizedInt(1, 1, 2) + LocalizedInt(1, 1, 3)


def test_from_fraction():
    assert LocalizedInt.from_fraction(Fraction(7, 27), 3) == L(7, 3)
    assert LocalizedInt.from_fraction(Fraction(7, 6), 6) == LocalizedInt(7, 1, 6)
    with pytest.raises(ValueError):
        LocalizedInt.from_fraction(Fraction(1, 2), 3)


def test_floor_frac():
    x = L(-5, 1)
    assert x.floor() == -2
    assert x.frac() == L(1, 1)
    assert not x.is_integer()


fractions3 = st.builds(lambda n, e: L(n, e), st.integers(-200, 200), st.integers(-3, 4))


@given(fractions3, fractions3)
def test_matches_rational_arithmetic(a, b):
    assert (a + b).to_fraction() == a.to_fraction() + b.to_fraction()
    assert (a - b).to_fraction() == a.to_fraction() - b.to_fraction()
    assert (a * b).to_fraction() == a.to_fraction() * b.to_fraction()
    assert (a < b) == (a.to_fraction() < b.to_fraction())


@given(fractions3, st.integers(-4, 4))
def test_shift_scales_by_powers(a, j):
    assert a.shift(j).to_fraction() == a.to_fraction() * Fraction(3) ** j


@given(fractions3)
def test_canonical_hash(a):
    b = LocalizedInt.from_fraction(a.to_fraction(), 3)
    assert a == b and hash(a) == hash(b)
    assert a.exponent <= 0 or a.numerator % 3 != 0


def test_mod_inverse_examples():
    assert mod_inverse(ModScalar(3, 2)) == ModScalar(1, 2)
    assert mod_inverse(ModScalar(1, 7)) == ModScalar(1, 7)
    assert mod_inverse(ModScalar(4, 9)) == ModScalar(7, 9)
    with pytest.raises(NotInvertible):
        mod_inverse(ModScalar(3, 9))


@given(st.integers(2, 60), st.integers(-500, 500))
def test_mod_inverse_property(n, r):
    s = ModScalar(r, n)
    if s.is_unit():
        assert s * mod_inverse(s) == ModScalar(1, n)
    else:
        with pytest.raises(NotInvertible):
            mod_inverse(s)


def test_rings():
    Q = Rationals()
    assert Q.inverse(3) == Fraction(1, 3)
    Z4 = IntegersMod(4)
    assert Z4.is_unit(3) and not Z4.is_unit(2)
    assert Z4(7) == Z4(3)
    assert parse_ring("Zm", 5) == IntegersMod(5)
    assert parse_ring("Z/7") == IntegersMod(7)
    assert parse_ring("Q") == Rationals()
    with pytest.raises(ValueError):
        parse_ring("R")
