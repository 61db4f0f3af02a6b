"""Intertwiner algebras End_KB(KX), direct-finiteness probes on matrix rings over
them, and the idempotents e_H = (1/|H|) sum_{h in H} h of KB."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from . import _kernels
from .groups import FiniteAction, FiniteGroup
from .linalg import rank_mod_p, rank_q, solve_mod_p, solve_q


class NotInvertibleInField(ArithmeticError):
    pass


def intertwiner_basis(action: FiniteAction) -> List[np.ndarray]:
    """0/1 matrices of the B-orbits on X x X; entry [y, x] belongs to the pair (y, x).

    They form a basis of End_KB(KX) over any field (or ring) K.
    """
    n = action.n
    gens = action.group.generators
    if gens:
        gi = np.ascontiguousarray(action.images[gens])
    else:
        gi = np.arange(n, dtype=np.int64)[None, :]
    labels = _kernels.K.pair_orbits(gi).reshape(n, n)
    return [(labels == lab).astype(np.int64) for lab in np.unique(labels)]


def burnside_pair_count(action: FiniteAction) -> int:
    """(1/|B|) sum_b fix(b)^2."""
    fix = action.fixed_counts().astype(np.int64)
    total = int(np.sum(fix * fix))
    assert total % action.group.order == 0
    return total // action.group.order


def commutant_dimension(action: FiniteAction, p: Optional[int] = None) -> int:
    """Dimension of {T : T P(b) = P(b) T} from the linear system itself (over F_p, or Q
    when p is None)."""
    n = action.n
    rows = []
    for b in action.group.generators:
        P = action.perm_matrix(b)
        # vec(T P - P T) = (P^T kron I - I kron P) vec(T) with row-major vec
        rows.append(np.kron(np.eye(n, dtype=np.int64), P.T) - np.kron(P, np.eye(n, dtype=np.int64)))
    if not rows:
        return n * n
    C = np.concatenate(rows)
    r = rank_q(C.tolist()) if p is None else rank_mod_p(C % p, p)
    return n * n - r


def spans_commutant(action: FiniteAction, basis: Sequence[np.ndarray], p: Optional[int] = None) -> bool:
    """Every basis matrix commutes with every P(b), and their number equals the
    solution-space dimension."""
    for b in range(action.group.order):
        P = action.perm_matrix(b)
        for T in basis:
            if not np.array_equal(T @ P, P @ T):
                return False
    stacked = np.array([T.reshape(-1) for T in basis])
    rk = rank_q(stacked.tolist()) if p is None else rank_mod_p(stacked % p, p)
    return rk == len(basis) == commutant_dimension(action, p)


# -- direct finiteness probes -------------------------------------------------------------


@dataclass
class ProbeReport:
    field: str
    dim: int
    size: int                      # matrix size s of M_s(End)
    mode: str                      # "exhaustive" or "sampled"
    elements_tried: int = 0
    right_invertible: int = 0      # a with some b in the algebra, a b = 1
    violations: int = 0            # ... but b a != 1
    witnesses: List[dict] = field(default_factory=list)

    def consistent(self) -> bool:
        return self.violations == 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def _assemble(basis: Sequence[np.ndarray], s: int, coeffs) -> np.ndarray:
    """The block matrix in M_s(End) with block (i, j) = sum_k coeffs[i, j, k] basis[k]."""
    n = basis[0].shape[0]
    out = np.zeros((s * n, s * n), dtype=object)
    for i in range(s):
        for j in range(s):
            blk = sum(coeffs[i][j][k] * basis[k].astype(object) for k in range(len(basis)))
            out[i * n:(i + 1) * n, j * n:(j + 1) * n] = blk
    return out


def _right_inverse_system(basis, s, a):
    """Linear system in the coefficients of b for a b = 1 inside M_s(End)."""
    n = basis[0].shape[0]
    d = len(basis)
    cols = []
    for i in range(s):
        for j in range(s):
            for k in range(d):
                unit = np.zeros((s * n, s * n), dtype=object)
                unit[i * n:(i + 1) * n, j * n:(j + 1) * n] = basis[k]
                cols.append((a.dot(unit)).reshape(-1))
    A = np.array(cols, dtype=object).T
    rhs = np.eye(s * n, dtype=np.int64).astype(object).reshape(-1)
    return A, rhs


def direct_finiteness_probe(basis: Sequence[np.ndarray], p: Optional[int], s: int = 1,
                            budget: int = 512, seed: int = 0) -> ProbeReport:
    """Search M_s(End) for a with a b = 1 but b a != 1.

    Over F_p the whole ring is enumerated when it has at most `budget` elements;
    otherwise (and always over Q, p = None) `budget` elements with small
    coefficients are sampled.  For each a the equation a b = 1 is solved inside the
    algebra, so right inverses are found rather than assumed.
    """
    d = len(basis)
    n = basis[0].shape[0] if d else 0
    fld = "Q" if p is None else f"F{p}"
    nvars = s * s * d
    if s == 0 or d == 0:
        return ProbeReport(fld, d, s, "exhaustive")
    exhaustive = p is not None and p ** nvars <= budget
    rep = ProbeReport(fld, d, s, "exhaustive" if exhaustive else "sampled")
    rng = random.Random(seed)
    if exhaustive:
        choices = (np.array(c).reshape(s, s, d) for c in np.ndindex(*([p] * nvars)))
    else:
        lo, hi = (0, p - 1) if p is not None else (-2, 2)
        choices = (np.array([rng.randint(lo, hi) for _ in range(nvars)]).reshape(s, s, d)
                   for _ in range(budget))
    ident = np.eye(s * n, dtype=np.int64)
    for c in choices:
        rep.elements_tried += 1
        a = _assemble(basis, s, c.tolist())
        A, rhs = _right_inverse_system(basis, s, a)
        if p is None:
            sol = solve_q(A.tolist(), rhs.tolist())
            if sol is None:
                continue
            b = _assemble(basis, s, np.array(sol, dtype=object).reshape(s, s, d).tolist())
            ab = a.dot(b)
            ba = b.dot(a)
            assert np.all(ab == ident)
            ok = bool(np.all(ba == ident))
        else:
            res = solve_mod_p(np.array(A % p, dtype=np.int64), np.array(rhs, dtype=np.int64), p)
            if res is None:
                continue
            x, _ = res
            b = _assemble(basis, s, x.reshape(s, s, d).tolist())
            assert np.all(a.dot(b) % p == ident)
            ok = bool(np.all(b.dot(a) % p == ident))
        rep.right_invertible += 1
        if not ok:
            rep.violations += 1
            rep.witnesses.append({"a": c.tolist()})
    return rep


# -- idempotents in KB ---------------------------------------------------------------------


def group_ring_mul(group: FiniteGroup, u, v):
    """Product in KB of coefficient vectors indexed by group elements."""
    out = [0] * group.order
    for g, cg in enumerate(u):
        if cg == 0:
            continue
        for h, ch in enumerate(v):
            if ch:
                k = int(group.table[g, h])
                out[k] = out[k] + cg * ch
    return out


@dataclass
class IdempotentSplit:
    subgroup: tuple
    field: str
    e: list
    idempotent: bool
    rank: int
    index: int

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["e"] = [str(c) for c in self.e]
        return d


def idempotent_for_subgroup(group: FiniteGroup, H: Sequence[int], p: Optional[int] = None) -> IdempotentSplit:
    H = tuple(sorted(set(int(h) for h in H)))
    if p is not None and len(H) % p == 0:
        raise NotInvertibleInField(f"|H| = {len(H)} is not invertible in F_{p}")
    if p is None:
        c = Fraction(1, len(H))
        zero = Fraction(0)
    else:
        c = pow(len(H), -1, p)
        zero = 0
    e = [zero] * group.order
    for h in H:
        e[h] = c
    e2 = group_ring_mul(group, e, e)
    if p is not None:
        e2 = [x % p for x in e2]
    # KB e is the image of x -> x e; column g holds g e
    cols = [group_ring_mul(group, [1 if k == g else 0 for k in range(group.order)], e)
            for g in range(group.order)]
    R = [list(row) for row in zip(*cols)]
    if p is None:
        rank = rank_q(R)
    else:
        rank = rank_mod_p(np.array(R, dtype=np.int64) % p, p)
    return IdempotentSplit(H, "Q" if p is None else f"F{p}", e, e2 == e, rank,
                           group.order // len(H))


def idempotent_split(action: FiniteAction, orbit: int, p: Optional[int] = None) -> IdempotentSplit:
    """e_H for H the stabiliser of the orbit's least point; KB e_H has rank |B/H|."""
    from .actions import orbits_stabs
    od = orbits_stabs(action)
    return idempotent_for_subgroup(action.group, od.stabilizers[orbit], p)
