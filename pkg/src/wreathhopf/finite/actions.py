"""Orbits, stabilisers and the hypothesis checkers on a finite action."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..abelian import AbelianSpec
from .groups import FiniteAction


@dataclass
class OrbitData:
    orbits: List[List[int]]
    reps: List[int]
    stabilizers: List[Tuple[int, ...]]
    kernel: Tuple[int, ...]


def stabilizer(action: FiniteAction, x: int) -> Tuple[int, ...]:
    return tuple(int(b) for b in np.nonzero(action.images[:, x] == x)[0])


def orbits_stabs(action: FiniteAction) -> OrbitData:
    """Orbit partition with least representatives, their stabilisers, and the kernel D."""
    seen = np.zeros(action.n, dtype=bool)
    orbits, reps, stabs = [], [], []
    for x in range(action.n):
        if seen[x]:
            continue
        orb = sorted(set(int(y) for y in action.images[:, x]))
        seen[orb] = True
        orbits.append(orb)
        reps.append(x)
        stabs.append(stabilizer(action, x))
    fixes_all = np.all(action.images == np.arange(action.n), axis=1)
    kernel = tuple(int(b) for b in np.nonzero(fixes_all)[0])
    return OrbitData(orbits, reps, stabs, kernel)


@dataclass
class LundstromResult:
    holds: bool
    witness: Optional[Tuple[int, int]] = None
    indices: Optional[Tuple[int, int]] = None


def lundstrom_check(action: FiniteAction) -> LundstromResult:
    """[B_x : B_x n B_y] = [B_y : B_y n B_x] for every pair of points."""
    stabs = [set(stabilizer(action, x)) for x in range(action.n)]
    for x in range(action.n):
        for y in range(x + 1, action.n):
            inter = len(stabs[x] & stabs[y])
            ix, iy = len(stabs[x]) // inter, len(stabs[y]) // inter
            if ix != iy:
                return LundstromResult(False, (x, y), (ix, iy))
    return LundstromResult(True)


def nonabelian_class_check(action: FiniteAction) -> Dict[int, bool]:
    """For each non-trivial d in D: does the conjugacy class of d contain two
    non-commuting elements?"""
    B = action.group
    out = {}
    for d in orbits_stabs(action).kernel:
        if d == 0:
            continue
        cls = B.conjugacy_class(d)
        out[d] = any(not B.commute(a, b) for i, a in enumerate(cls) for b in cls[i + 1:])
    return out


def exponent_two_condition(action: FiniteAction, A: AbelianSpec) -> bool:
    """If A has exponent 2 then D has no element of order 2."""
    if not (A.is_finite() and A.invariants and all(d == 2 for d in A.invariants)):
        return True
    orders = action.group.element_orders()
    return all(orders[d] != 2 for d in orbits_stabs(action).kernel)


def annihilator_square_test(action: FiniteAction, A: AbelianSpec, b0: int) -> bool:
    """(b0 - 1)^2 o m = 0 for every generator a_i x of AX."""
    if A.is_trivial():
        return True
    img = action.images[b0]
    for x in range(action.n):
        terms: Dict[int, int] = {}
        for y, c in ((int(img[img[x]]), 1), (int(img[x]), -2), (x, 1)):
            terms[y] = terms.get(y, 0) + c
        for d in A.invariants:
            for c in terms.values():
                if (c % d if d else c) != 0:
                    return False
    return True


def stab_permutation_check(action: FiniteAction, automorphisms: Sequence[Sequence[int]]) -> bool:
    """Every automorphism maps each point stabiliser onto some point stabiliser."""
    stabs = {frozenset(stabilizer(action, x)) for x in range(action.n)}
    for sigma in automorphisms:
        sig = np.asarray(sigma)
        for H in stabs:
            if frozenset(int(sig[h]) for h in H) not in stabs:
                return False
    return True
