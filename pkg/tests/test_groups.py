from __future__ import annotations

import numpy as np
import pytest

from wreathhopf.finite.groups import (FiniteAction, FiniteGroup, GroupFormatError, coset_action,
                                      cyclic_group, dihedral_group, disjoint_union, format_action,
                                      format_cycles, natural_action, parse_action, parse_cycles,
                                      regular_action, symmetric_group, trivial_action)


def test_basic_groups():
    assert symmetric_group(3).order == 6 and not symmetric_group(3).is_abelian()
    assert dihedral_group(4).order == 8
    assert cyclic_group(5).is_abelian()
    assert sorted(cyclic_group(6).element_orders().tolist()) == [1, 2, 3, 3, 6, 6]
    assert len(dihedral_group(4).subgroups()) == 10
    assert len(symmetric_group(3).subgroups()) == 6
    assert len(dihedral_group(4).center()) == 2
    assert len(symmetric_group(3).minimal_generators()) == 2


def test_table_validation():
    with pytest.raises(GroupFormatError):
        FiniteGroup([[1, 0], [0, 1]])
    with pytest.raises(GroupFormatError):
        FiniteGroup([[0, 1], [1, 1]])


def test_action_validation():
    C2 = cyclic_group(2)
    with pytest.raises(GroupFormatError):
        FiniteAction(C2, [[0, 1], [0, 0]])
    S3 = symmetric_group(3)
    bad = natural_action(S3).images.copy()
    bad[[1, 2]] = bad[[2, 1]]
    if not np.array_equal(bad, natural_action(S3).images):
        with pytest.raises(GroupFormatError):
            FiniteAction(S3, bad)


@pytest.mark.parametrize("action", [
    natural_action(symmetric_group(3)), regular_action(cyclic_group(4)),
    coset_action(dihedral_group(4), [0, 4]), trivial_action(cyclic_group(3), 2),
], ids=["S3", "C4reg", "D4coset", "C3triv"])
def test_left_action_law(action):
    g = action.group
    for a in range(g.order):
        for b in range(g.order):
            assert np.array_equal(action.images[g.mul(a, b)], action.images[a][action.images[b]])


def test_coset_action_sizes():
    D4 = dihedral_group(4)
    for H in D4.subgroups():
        act = coset_action(D4, H)
        assert act.n == 8 // len(H)


def test_cycles_roundtrip():
    p = parse_cycles("(1 3)(2 4 5)", 5)
    assert p == (2, 3, 0, 4, 1)
    assert format_cycles(p) == "(1 3)(2 4 5)"
    assert format_cycles((0, 1, 2)) == "()"
    for bad in ["(1 6)", "(1 1)", "1 2", ""]:
        with pytest.raises(GroupFormatError):
            parse_cycles(bad, 5)


def test_parse_action_errors():
    for text in ["", "n 3", "m 3\n(1 2)", "n 3\ntable 2\n0 1\n", "n 2\ntable 2\n0 1\n1 1\n1 (1 2)"]:
        with pytest.raises(GroupFormatError):
            parse_action(text)


def test_table_block_roundtrip():
    C4 = cyclic_group(4)
    act = disjoint_union([coset_action(C4, [0, 2]), trivial_action(C4, 1)])
    back = parse_action(format_action(act))
    assert np.array_equal(back.images, act.images)
    assert np.array_equal(back.group.table, act.group.table)


def test_perm_roundtrip():
    act = natural_action(symmetric_group(4))
    back = parse_action(format_action(act))
    assert back.group.order == 24
