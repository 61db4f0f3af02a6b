from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from wreathhopf.abelian import AbelianSpec
from wreathhopf.bsgroup import BSBackend, base_point, bs_t, coset_act
from wreathhopf.finite.groups import natural_action, symmetric_group
from wreathhopf.induced import random_wreath_element
from wreathhopf.wreath import ContextMismatch, ModuleVector, WreathGroup, mv_act, pi, wr_mul

Z2 = AbelianSpec((2,))
Z5 = AbelianSpec((5,))


def test_zero_values_dropped():
    mv = ModuleVector(Z2, {0: 1, 1: 2, 2: 0})
    assert mv.support == (0,)
    assert (mv + mv).is_zero()


def test_mv_act_bs():
    be = BSBackend(3)
    v = base_point(3)
    m = ModuleVector.basis(Z2, v)
    assert mv_act(be, bs_t(3), m) == ModuleVector.basis(Z2, coset_act(bs_t(3), v))
    assert mv_act(be, be.identity, m) == m


def test_mv_act_transposition():
    act = natural_action(symmetric_group(3))
    swap = next(b for b in range(6) if act.images[b].tolist() == [1, 0, 2])
    m = ModuleVector(Z5, {0: 2, 1: 3})
    assert mv_act(act, swap, m) == ModuleVector(Z5, {1: 2, 0: 3})


def test_products():
    act = natural_action(symmetric_group(3))
    G = WreathGroup(act, Z5)
    m1, m2 = ModuleVector(Z5, {0: 1}), ModuleVector(Z5, {0: 3, 2: 1})
    assert G.element(m1) * G.element(m2) == G.element(m1 + m2)
    for b in range(6):
        bb = G.element(None, b)
        assert bb * G.element(m2) * bb.inverse() == G.element(mv_act(act, b, m2))
    g = G.element(m2, 4)
    assert (g * g.inverse()).is_identity()
    assert pi(G.element(m1)) == 0 and pi(G.element(None, 3)) == 3


def test_context_mismatch():
    act = natural_action(symmetric_group(3))
    with pytest.raises(ContextMismatch):
        wr_mul(WreathGroup(act, Z5).identity, WreathGroup(act, Z2).identity)
    with pytest.raises(ContextMismatch):
        ModuleVector(Z5, {0: Z2.element((1,))})


BSG = WreathGroup(BSBackend(3), Z2)
bs_elements = st.integers(0, 10 ** 6).map(lambda s: random_wreath_element(random.Random(s), BSG))


@given(bs_elements, bs_elements, bs_elements)
def test_group_axioms_bs(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert pi(a * b) == pi(a) * pi(b)


S3 = natural_action(symmetric_group(3))
FG = WreathGroup(S3, Z5)
fin_elements = st.builds(lambda vals, b: FG.element(ModuleVector(Z5, dict(enumerate(vals))), b),
                         st.lists(st.integers(0, 4), min_size=3, max_size=3), st.integers(0, 5))


@given(fin_elements, fin_elements, fin_elements)
def test_group_axioms_finite(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert pi(a * b) == S3.mul(pi(a), pi(b))
