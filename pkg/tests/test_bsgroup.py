from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from wreathhopf.bsgroup import (BSBackend, BSElement, CosetPoint, base_point, bs_element, bs_h,
                                bs_identity, bs_mul, bs_t, coset_act, coset_canonical, in_H, parse_word)
from wreathhopf.induced import random_bs_element, random_coset_point
from wreathhopf.scalars import BaseMismatch, LocalizedInt


K = 3


def L(n, e=0, k=K):
    return LocalizedInt(n, e, k)


def test_relation_holds():
    t, h = bs_t(K), bs_h(K)
    assert t.inverse() * h * t == h ** K
    assert bs_mul(bs_element(L(1), 0, K), t) == bs_element(L(1), 1, K)
    assert (bs_element(L(0), -1, K) * h * t) == bs_element(L(3), 0, K)


def test_inverse_formula():
    g = bs_element(L(5, 1), 2, K)
    assert g.inverse() == bs_element(-(L(5, 1).shift(2)), -2, K)
    assert g * g.inverse() == bs_identity(K)


def test_base_mismatch():
    with pytest.raises(BaseMismatch):
        bs_t(2) * bs_t(3)


def test_coset_canonical_examples():
    assert coset_canonical(bs_identity(K)) == base_point(K) == CosetPoint(0, L(0))
    assert coset_canonical(bs_element(L(5, 1), 2, K)) == CosetPoint(2, L(0))
    assert coset_canonical(bs_element(L(1, 1), 0, K)) == CosetPoint(0, L(1, 1))


def test_coset_act_examples():
    v = base_point(K)
    assert coset_act(bs_t(K), v) == CosetPoint(1, L(0))
    assert coset_act(bs_h(K), CosetPoint(1, L(0))) == CosetPoint(1, L(0))
    x = CosetPoint(-2, L(4, 2))
    assert coset_act(bs_identity(K), x) == x


def test_in_H():
    assert in_H(bs_h(K))
    assert not in_H(bs_t(K))
    assert not in_H(bs_element(L(1, 1), 0, K))


def test_parse_word():
    assert parse_word("t^-1 h t", K) == bs_h(K, 3)
    assert parse_word("h^{1/3}", K) == bs_h(K, L(1, 1))
    assert parse_word("", K) == bs_identity(K)
    with pytest.raises(ValueError):
        parse_word("x", K)


elements = st.integers(0, 10 ** 6).map(lambda s: random_bs_element(random.Random(s), K))
points = st.integers(0, 10 ** 6).map(lambda s: random_coset_point(random.Random(s), K))


@given(elements, elements, elements)
def test_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * bs_identity(K) == a == bs_identity(K) * a
    assert a * a.inverse() == bs_identity(K)


@given(elements, elements, points)
def test_action_axioms(a, b, x):
    assert coset_act(a * b, x) == coset_act(a, coset_act(b, x))
    assert coset_act(bs_identity(K), x) == x


@given(elements)
def test_canonical_is_coset_invariant(g):
    # g and g h^j name the same coset
    assert coset_canonical(g) == coset_canonical(g * bs_h(K, 7))
    assert coset_canonical(g) == coset_act(g, base_point(K))


@given(points)
def test_representative_roundtrip(x):
    assert coset_canonical(x.representative()) == x


def test_backend():
    be = BSBackend(K)
    assert not be.finite
    assert be.mul(be.identity, bs_t(K)) == bs_t(K)
    with pytest.raises(TypeError):
        be.points()
