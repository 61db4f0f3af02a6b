"""Derivations B -> AX, principal derivations and H^1, plus an independent
Shapiro-style oracle for transitive actions with F_p coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..abelian import AbelianSpec, primary_decompose
from .groups import FiniteAction, FiniteGroup
from .linalg import kernel_of, rank_q, span_group
from .module import BoundExceeded, FiniteModule


@dataclass
class H1Result:
    der_order: int
    pder_order: int
    h1_order: int
    der_rank: int = 0          # ranks of the free part when A has Z summands
    pder_rank: int = 0
    h1_rank: int = 0
    by_prime: Dict[int, tuple] = field(default_factory=dict)

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["by_prime"] = {str(k): list(v) for k, v in self.by_prime.items()}
        return d


def cocycle_matrix(module: FiniteModule) -> np.ndarray:
    """Rows encode gamma(b1 b2) - gamma(b1) - b1 o gamma(b2) = 0 for all b1, b2.

    Unknowns are gamma(b) stacked: column b * dim + j.
    """
    B = module.action.group
    nB, d = B.order, module.dim
    M = np.zeros((nB * nB * d, nB * d), dtype=np.int64)
    eye = np.eye(d, dtype=np.int64)
    for b1 in range(nB):
        P = module.perm_matrix(b1)
        for b2 in range(nB):
            r0 = (b1 * nB + b2) * d
            blk = M[r0:r0 + d]
            blk[:, B.mul(b1, b2) * d:(B.mul(b1, b2) + 1) * d] += eye
            blk[:, b1 * d:(b1 + 1) * d] -= eye
            blk[:, b2 * d:(b2 + 1) * d] -= P
    return M


def _torsion_part(action: FiniteAction, A: AbelianSpec):
    mod = FiniteModule(action, A)
    nB = action.group.order
    if mod.dim == 0:
        return mod, 1, [], 1
    C = cocycle_matrix(mod)
    moduli = np.tile(mod.moduli, nB)
    order, gens = kernel_of(C, moduli, moduli[np.arange(C.shape[0]) % mod.dim])
    inv_order = mod.invariant_order()
    return mod, order, gens, mod.size // inv_order


def derivations_h1(action: FiniteAction, A: AbelianSpec) -> H1Result:
    """|Der(B, AX)|, |PDer(B, AX)| and |H^1(B, AX)|.

    Torsion parts are solved exactly per prime; Z summands contribute ranks
    (computed over Q), and H^1 of a finite group with Z-free coefficients is
    torsion, so its free rank is 0.
    """
    parts = primary_decompose(A)
    free = parts.pop(0, None)
    res = H1Result(1, 1, 1)
    for p, Ap in sorted(parts.items()):
        _, der, _, pder = _torsion_part(action, Ap)
        res.der_order *= der
        res.pder_order *= pder
        res.by_prime[p] = (der, pder, der // pder)
    res.h1_order = res.der_order // res.pder_order
    if free is not None:
        n0 = len(free.invariants)
        C = _cocycle_rows_integer(action)
        der_rank = (action.group.order * action.n - rank_q(C.tolist())) * n0
        n_orbits = len({tuple(sorted(set(action.images[:, x].tolist()))) for x in range(action.n)})
        pder_rank = (action.n - n_orbits) * n0
        res.der_rank, res.pder_rank, res.h1_rank = der_rank, pder_rank, der_rank - pder_rank
    return res


def _cocycle_rows_integer(action: FiniteAction) -> np.ndarray:
    """The cocycle system for coefficients ZX (one coordinate per point)."""
    B = action.group
    nB, n = B.order, action.n
    rows = []
    eye = np.eye(n, dtype=np.int64)
    for b1 in range(nB):
        P = action.perm_matrix(b1)
        for b2 in range(nB):
            blk = np.zeros((n, nB * n), dtype=np.int64)
            b12 = B.mul(b1, b2)
            blk[:, b12 * n:(b12 + 1) * n] += eye
            blk[:, b1 * n:(b1 + 1) * n] -= eye
            blk[:, b2 * n:(b2 + 1) * n] -= P
            rows.append(blk)
    return np.concatenate(rows, axis=0)


def derivations(action: FiniteAction, A: AbelianSpec, bound: int = 1 << 14) -> List[np.ndarray]:
    """Every derivation as an array gamma[b, j] (finite A, small cases)."""
    mod, order, gens, _ = _torsion_part(action, A)
    if order > bound:
        raise BoundExceeded(f"|Der| = {order} exceeds {bound}")
    nB = action.group.order
    moduli = np.tile(mod.moduli, nB)
    return [np.array(v, dtype=np.int64).reshape(nB, mod.dim) for v in span_group(gens, moduli)]


def is_derivation(module: FiniteModule, gamma: np.ndarray) -> bool:
    B = module.action.group
    for b1 in range(B.order):
        for b2 in range(B.order):
            lhs = gamma[B.mul(b1, b2)]
            rhs = gamma[b1] + module.act(b1, gamma[b2])
            if np.any((lhs - rhs) % module.moduli):
                return False
    return True


def derivations_brute(action: FiniteAction, A: AbelianSpec, bound: int = 1 << 16) -> int:
    """|Der| by trying every assignment of values on a generating set."""
    mod = FiniteModule(action, A)
    B = action.group
    gens = B.generators
    vecs = mod.all_vectors(bound)
    if len(vecs) ** len(gens) > bound:
        raise BoundExceeded("search space too large")
    count = 0
    for choice in np.ndindex(*([len(vecs)] * len(gens))):
        gamma = _extend_derivation(mod, gens, [vecs[c] for c in choice])
        if gamma is not None:
            count += 1
    return count


def _extend_derivation(mod: FiniteModule, gens, values) -> Optional[np.ndarray]:
    B = mod.action.group
    gamma: Dict[int, np.ndarray] = {0: mod.zero()}
    queue = [0]
    for b in queue:
        for g, v in zip(gens, values):
            c = B.mul(b, g)
            val = mod.reduce(gamma[b] + mod.act(b, v))
            if c in gamma:
                if np.any(gamma[c] != val):
                    return None
            else:
                gamma[c] = val
                queue.append(c)
    out = np.array([gamma[b] for b in range(B.order)])
    return out if is_derivation(mod, out) else None


# -- Shapiro oracle --------------------------------------------------------------------


def subgroup_as_group(group: FiniteGroup, H: Sequence[int]) -> FiniteGroup:
    H = sorted(set(int(h) for h in H))
    if H[0] != 0:
        raise ValueError("subgroup must contain the identity")
    pos = {h: i for i, h in enumerate(H)}
    T = np.array([[pos[int(group.table[a, b])] for b in H] for a in H], dtype=np.int64)
    return FiniteGroup(T, name="H")


def hom_count_to_cyclic(H: FiniteGroup, p: int) -> int:
    """|Hom(H, Z/p)|, brute force over images of a generating set."""
    gens = H.generators
    count = 0
    for choice in np.ndindex(*([p] * len(gens))):
        img = {0: 0}
        queue = [0]
        ok = True
        for h in queue:
            for g, c in zip(gens, choice):
                k = int(H.table[h, g])
                val = (img[h] + c) % p
                if k in img:
                    if img[k] != val:
                        ok = False
                        break
                else:
                    img[k] = val
                    queue.append(k)
            if not ok:
                break
        if ok:
            ok = all((img[int(H.table[a, b])] - img[a] - img[b]) % p == 0
                     for a in range(H.order) for b in range(H.order))
        count += ok
    return count


def shapiro_oracle(group: FiniteGroup, H: Sequence[int], p: int) -> int:
    """|H^1(B, F_p[B/H])| computed as |Hom(H, F_p)|."""
    return hom_count_to_cyclic(subgroup_as_group(group, H), p)
