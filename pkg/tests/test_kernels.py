"""The numba and numpy kernel paths must agree exactly."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wreathhopf.finite import _kernels
from wreathhopf.finite.groups import cyclic_group, dihedral_group, symmetric_group

NP = _kernels.NUMPY_KERNELS
NB = _kernels.NUMBA_KERNELS
needs_numba = pytest.mark.skipif(NB is None, reason="numba not importable")


def test_env_flag_parsing(monkeypatch):
    assert _kernels.K in _kernels.backends()
    assert NP.name == "numpy"


@needs_numba
@pytest.mark.parametrize("group", [cyclic_group(6), symmetric_group(3), dihedral_group(4)],
                         ids=["C6", "S3", "D4"])
def test_search_homs_agree(group):
    gens = np.array(group.minimal_generators(), dtype=np.int64)
    n = group.order
    flat = np.concatenate([np.arange(n)] * len(gens)).astype(np.int64)
    off = np.arange(len(gens) + 1, dtype=np.int64) * n
    for bij in (False, True):
        a = NP.search_homs(group.table, gens, group.table, flat, off, bij)
        b = NB.search_homs(group.table, gens, group.table, flat, off, bij)
        assert np.array_equal(a, b)
        for f in a:
            assert NP.is_hom(group.table, group.table, f)
            assert NB.is_hom(group.table, group.table, f)


@needs_numba
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([(2, 1), (2, 3), (3, 1), (3, 2), (5, 1)]))
def test_local_smith_agree(seed, pe):
    p, e = pe
    rng = np.random.default_rng(seed)
    r, c = rng.integers(1, 6, size=2)
    M = rng.integers(0, p ** e, size=(r, c)).astype(np.int64)
    v1, Q1 = NP.local_smith(M, p, e)
    v2, Q2 = NB.local_smith(M, p, e)
    assert np.array_equal(v1, v2) and np.array_equal(Q1, Q2)


@needs_numba
@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_pair_orbits_agree(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 7))
    gens = np.array([rng.permutation(n) for _ in range(int(rng.integers(1, 3)))], dtype=np.int64)
    assert np.array_equal(NP.pair_orbits(gens), NB.pair_orbits(gens))


def test_extend_hom_detects_inconsistency(kernels):
    C4, C2 = cyclic_group(4), cyclic_group(2)
    out = np.empty(4, dtype=np.int64)
    ok = kernels.extend_hom(C4.table, np.array([1]), C2.table, np.array([1]), out)
    assert ok and out.tolist() == [0, 1, 0, 1]
    # C2 -> C4 sending the generator to an element of order 4 is not a homomorphism
    out2 = np.empty(2, dtype=np.int64)
    assert not kernels.extend_hom(C2.table, np.array([1]), C4.table, np.array([1]), out2)
