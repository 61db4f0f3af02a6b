from __future__ import annotations

import numpy as np
import pytest

from wreathhopf.abelian import AbelianSpec
from wreathhopf.finite.groups import (cyclic_group, natural_action, regular_action,
                                      symmetric_group, trivial_action)
from wreathhopf.finite.module import (BoundExceeded, FiniteModule, FiniteWreath, InfiniteCoefficients,
                                      ModuleMap)

S3N = natural_action(symmetric_group(3))


def test_module_basics():
    mod = FiniteModule(S3N, AbelianSpec((6,)))
    assert mod.A.invariants in ((2, 3), (3, 2))
    assert mod.size == 6 ** 3
    v = mod.all_vectors(bound=1000)
    assert len({mod.encode(x) for x in v}) == mod.size
    for x in v[::17]:
        assert np.array_equal(mod.decode(mod.encode(x)), x)
    with pytest.raises(InfiniteCoefficients):
        FiniteModule(S3N, AbelianSpec((0,)))
    with pytest.raises(BoundExceeded):
        FiniteModule(S3N, AbelianSpec((7,))).all_vectors(bound=100)


def test_act_is_left_action():
    mod = FiniteModule(S3N, AbelianSpec((3,)))
    B = S3N.group
    v = np.array([1, 2, 0])
    for a in range(6):
        for b in range(6):
            assert np.array_equal(mod.act(B.mul(a, b), v), mod.act(a, mod.act(b, v)))
        # b o (a x) = a (b x)
        e = mod.basis_vector(0)
        assert np.array_equal(mod.act(a, e), mod.basis_vector(int(S3N.images[a, 0])))


def test_invariants():
    assert FiniteModule(S3N, AbelianSpec((3,))).invariant_order() == 3
    assert FiniteModule(trivial_action(cyclic_group(2), 2), AbelianSpec((2,))).invariant_order() == 4
    assert FiniteModule(regular_action(cyclic_group(4)), AbelianSpec((4,))).invariant_order() == 4


def test_module_maps():
    mod = FiniteModule(S3N, AbelianSpec((3,)))
    ident = ModuleMap.identity(mod)
    assert ident.is_bijective() and ident.is_equivariant() and ident.is_well_defined()
    J = ModuleMap(mod, np.ones((3, 3), dtype=np.int64))
    assert J.is_equivariant() and not J.is_bijective()
    assert J.kernel_order() == 9
    assert J * J == J.__class__(mod, 3 * np.ones((3, 3), dtype=np.int64))
    swap = ModuleMap.from_point_map(mod, [1, 0, 2])
    assert not swap.is_equivariant() and swap.is_bijective()


@pytest.mark.parametrize("action,A,order", [
    (S3N, (3,), 162), (regular_action(cyclic_group(3)), (2,), 24),
    (trivial_action(cyclic_group(2), 1), (2,), 4),
])
def test_wreath_table(action, A, order):
    W = FiniteWreath(action, AbelianSpec(A))
    G = W.group
    assert G.order == order
    T = G.table
    assert np.array_equal(T[T], T[:, T])
    rng = np.random.default_rng(0)
    for g, h in rng.integers(0, order, size=(50, 2)):
        assert W.mul(int(g), int(h)) == T[g, h]


def test_wreath_bound():
    with pytest.raises(BoundExceeded):
        FiniteWreath(S3N, AbelianSpec((5,)), max_order=200)


def test_center_orders():
    assert FiniteWreath(S3N, AbelianSpec((3,))).center_order() == 3
    assert FiniteWreath(regular_action(cyclic_group(2)), AbelianSpec((2,))).center_order() == 2
