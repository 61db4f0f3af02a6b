"""Exact linear algebra over Z/p^e (via the local Smith kernel) and over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import _kernels


def _as_matrix(M, cols: Optional[int] = None) -> np.ndarray:
    A = np.asarray(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(0 if A.size == 0 else 1, -1) if cols is None else A.reshape(-1, cols)
    return A


def local_kernel(M, p: int, e: int = 1, cols: Optional[int] = None) -> Tuple[int, List[np.ndarray]]:
    """Kernel of x -> M x over Z/p^e: returns (order, generators)."""
    A = _as_matrix(M, cols)
    c = A.shape[1]
    q = p ** e
    if A.shape[0] == 0:
        return q ** c, [np.eye(c, dtype=np.int64)[j] for j in range(c)]
    vals, Q = _kernels.K.local_smith(np.ascontiguousarray(A), p, e)
    order = 1
    gens = []
    for j in range(c):
        v = int(vals[j]) if j < len(vals) else e
        if v == 0:
            continue
        order *= p ** v
        gens.append((Q[:, j] * p ** (e - v)) % q)
    return order, gens


def nullspace_mod_p(M, p: int, cols: Optional[int] = None) -> List[np.ndarray]:
    return local_kernel(M, p, 1, cols)[1]


def rank_mod_p(M, p: int) -> int:
    A = _as_matrix(M)
    if A.size == 0:
        return 0
    vals, _ = _kernels.K.local_smith(np.ascontiguousarray(A), p, 1)
    return int(np.sum(vals == 0))


def solve_mod_p(A, b, p: int) -> Optional[Tuple[np.ndarray, List[np.ndarray]]]:
    """Solutions of A x = b over F_p as (particular, nullspace basis), or None."""
    A = _as_matrix(A)
    aug = np.concatenate([A, (-np.asarray(b, dtype=np.int64).reshape(-1, 1)) % p], axis=1)
    basis = nullspace_mod_p(aug, p)
    part = next(((v * pow(int(v[-1]), -1, p)) % p for v in basis if v[-1] % p), None)
    if part is None:
        return None
    return part[:-1], nullspace_mod_p(A, p)


def span_mod_p(vectors: Sequence[np.ndarray], p: int) -> List[Tuple[int, ...]]:
    """Every element of the F_p-span of the vectors (small spans only)."""
    vecs = [np.asarray(v, dtype=np.int64) % p for v in vectors]
    if not vecs:
        return []
    out = {tuple(np.zeros_like(vecs[0]))}
    for v in vecs:
        out |= {tuple((np.array(u) + c * v) % p) for u in out for c in range(1, p)}
    return sorted(out)


def span_group(gens: Sequence[np.ndarray], moduli: Sequence[int]) -> List[Tuple[int, ...]]:
    """Every element of the subgroup generated by gens in prod Z/moduli."""
    mod = np.asarray(moduli, dtype=np.int64)
    zero = tuple([0] * len(mod))
    seen = {zero}
    queue = [zero]
    for x in queue:
        for g in gens:
            y = tuple(((np.array(x) + g) % mod).tolist())
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


# -- rational arithmetic ------------------------------------------------------------


def rref_q(M) -> Tuple[List[List[Fraction]], List[int]]:
    rows = [[Fraction(int(x)) if not isinstance(x, Fraction) else x for x in row] for row in M]
    if not rows:
        return [], []
    ncol = len(rows[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncol):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank_q(M) -> int:
    return len(rref_q(M)[1])


def nullspace_q(M, ncols: Optional[int] = None) -> List[List[Fraction]]:
    rows, pivots = rref_q(M)
    ncol = len(rows[0]) if rows else (ncols or 0)
    free = [c for c in range(ncol) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncol
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(v)
    return basis


def solve_q(A, b) -> Optional[List[Fraction]]:
    """One rational solution of A x = b, or None."""
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(A, b)]
    rows, pivots = rref_q(aug)
    ncol = len(aug[0]) - 1
    if ncol in pivots:
        return None
    x = [Fraction(0)] * ncol
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][-1]
    return x


def _prime_power(q: int) -> Tuple[int, int]:
    p = 2
    while q % p:
        p += 1
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise ValueError("modulus is not a prime power")
    return p, e


def kernel_of(F, src_moduli: Sequence[int], dst_moduli: Sequence[int]) -> Tuple[int, List[np.ndarray]]:
    """Kernel of the homomorphism prod Z/src -> prod Z/dst given by the integer matrix F.

    All moduli must be prime powers; entries must define a homomorphism
    (F[a, b] * src[b] = 0 mod dst[a]).  The problem splits by prime; on each prime,
    coordinates are scaled into Z/p^E with E the largest exponent present.
    """
    F = np.asarray(F, dtype=np.int64)
    src = [int(d) for d in src_moduli]
    dst = [int(d) for d in dst_moduli]
    order = 1
    gens: List[np.ndarray] = []
    primes = sorted({_prime_power(d)[0] for d in src})
    for p in primes:
        cols = [b for b, d in enumerate(src) if d % p == 0]
        rows = [a for a, d in enumerate(dst) if d % p == 0]
        E = max(_prime_power(src[b])[1] for b in cols)
        if rows:
            E = max(E, max(_prime_power(dst[a])[1] for a in rows))
        q = p ** E
        sub = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for i, a in enumerate(rows):
            scale = q // dst[a]
            sub[i] = (F[a, cols] % dst[a]) * scale % q
        k_order, k_gens = local_kernel(sub, p, E, cols=len(cols))
        redundancy = 1
        for b in cols:
            redundancy *= q // src[b]
        order *= k_order // redundancy
        for g in k_gens:
            full = np.zeros(len(src), dtype=np.int64)
            for j, b in enumerate(cols):
                full[b] = g[j] % src[b]
            if full.any():
                gens.append(full)
    return order, gens
