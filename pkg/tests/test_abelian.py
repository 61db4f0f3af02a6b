from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from wreathhopf.abelian import (AbelianSpec, a_add, crt_recombine, exponent, factorize,
                                invariant_factors, primary_decompose)
from wreathhopf.scalars import BaseMismatch


def S(*inv):
    return AbelianSpec(tuple(inv))


def test_primary_decompose_examples():
    assert primary_decompose(S(0, 0)) == {0: S(0, 0)}
    assert primary_decompose(S(12)) == {2: S(4), 3: S(3)}
    assert primary_decompose(S(2, 3, 0)) == {0: S(0), 2: S(2), 3: S(3)}


def test_add_examples():
    A = S(6)
    assert a_add(A.element((3,)), A.element((5,))) == A.element((2,))
    B = S(2)
    assert B.element((1,)) + B.element((1,)) == B.zero()
    x = S(4, 0).element((3, -7))
    assert x + x.spec.zero() == x
    with pytest.raises(BaseMismatch):
        a_add(A.zero(), B.zero())


def test_exponent():
    assert exponent(S(2)) == 2
    assert exponent(S(0)) == math.inf
    assert exponent(S(4, 6)) == 12


def test_counts():
    A = AbelianSpec.parse("0,4,12,3")
    assert A.rank == 1
    assert A.n_p(2) == 2 and A.n_p(3) == 2 and A.n_p(5) == 0 and A.n_p(0) == 1
    assert A.primes() == [2, 3]
    assert not A.is_finite()
    assert AbelianSpec.parse("").is_trivial()
    assert S(1, 1).is_trivial()
    with pytest.raises(ValueError):
        S(-2)


def test_primary_form_and_invariants():
    A = S(12, 18)
    assert A.primary_form() == S(2, 4, 9, 3) or sorted(A.primary_form().invariants) == [2, 3, 4, 9]
    assert invariant_factors(A) == [6, 36]
    assert A.primary_form().order() == A.order() == 216


invariants = st.lists(st.sampled_from([0, 2, 3, 4, 5, 6, 8, 9, 12]), max_size=4)


@given(invariants)
def test_decompose_recombine_roundtrip(inv):
    A = AbelianSpec(tuple(inv))
    parts = primary_decompose(A)
    for p, spec in parts.items():
        if p:
            assert all(factorize(d) and set(factorize(d)) == {p} for d in spec.invariants)
    rec = AbelianSpec(tuple(crt_recombine(parts)))
    assert rec.order() == A.order()
    assert rec.rank == A.rank
    for p in A.primes():
        assert rec.n_p(p) == A.n_p(p)
    fac = [d for d in crt_recombine(parts) if d]
    assert all(b % a == 0 for a, b in zip(fac, fac[1:]))


@given(invariants, st.data())
def test_group_laws(inv, data):
    A = AbelianSpec(tuple(inv))
    coords = st.tuples(*[st.integers(-50, 50) for _ in A.invariants])
    x, y, z = (A.element(data.draw(coords)) for _ in range(3))
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x - x).is_zero()
    assert all(0 <= c < d for c, d in zip(x.coords, A.invariants) if d)
