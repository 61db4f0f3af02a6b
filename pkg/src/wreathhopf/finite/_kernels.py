"""Hot inner loops of the finite pipeline.

Each kernel has a numba-compiled version and a numpy / plain-Python fallback with
identical results.  The compiled path is used when numba imports and the
environment variable WREATHHOPF_NUMBA is not set to 0.  Both paths stay importable
(`NUMBA_KERNELS`, `NUMPY_KERNELS`) so tests and the benchmark can compare them.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

_flag = os.environ.get("WREATHHOPF_NUMBA", "1").strip().lower()
USE_NUMBA = numba is not None and _flag not in ("0", "false", "no", "off")


# --- group homomorphism extension --------------------------------------------------


def _extend_hom_py(src, gens, dst, imgs, out):
    """Extend gens -> imgs along the right Cayley graph of src.

    Fills out[x] with the image of x and returns False on an inconsistency (the
    assignment does not extend to a homomorphism).  Identity must be element 0.
    """
    n = src.shape[0]
    out[:] = -1
    out[0] = 0
    srcl = src.tolist()
    dstl = dst.tolist()
    gl = gens.tolist()
    il = imgs.tolist()
    o = [-1] * n
    o[0] = 0
    queue = [0]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        fx = o[x]
        row = srcl[x]
        drow = dstl[fx]
        for i in range(len(gl)):
            y = row[gl[i]]
            fy = drow[il[i]]
            if o[y] < 0:
                o[y] = fy
                queue.append(y)
            elif o[y] != fy:
                return False
    out[:] = o
    return len(queue) == n


def _extend_hom_nb(src, gens, dst, imgs, out):
    n = src.shape[0]
    for i in range(n):
        out[i] = -1
    out[0] = 0
    queue = np.empty(n, dtype=np.int64)
    queue[0] = 0
    tail = 1
    head = 0
    while head < tail:
        x = queue[head]
        head += 1
        fx = out[x]
        for i in range(gens.shape[0]):
            y = src[x, gens[i]]
            fy = dst[fx, imgs[i]]
            if out[y] < 0:
                out[y] = fy
                queue[tail] = y
                tail += 1
            elif out[y] != fy:
                return False
    return tail == n


def _is_hom_np(src, dst, f):
    return bool(np.array_equal(f[src], dst[f[:, None], f[None, :]]))


def _is_hom_nb(src, dst, f):
    n = src.shape[0]
    for a in range(n):
        fa = f[a]
        for b in range(n):
            if f[src[a, b]] != dst[fa, f[b]]:
                return False
    return True


def _search_homs_py(src, gens, dst, cand_flat, cand_off, bijective):
    """All homomorphisms src -> dst sending gens[i] into its candidate list.

    cand_flat / cand_off encode the candidate lists CSR-style.  Returns a 2-D array
    of image tables (one row per homomorphism), optionally bijective ones only.
    """
    n = src.shape[0]
    m = dst.shape[0]
    k = gens.shape[0]
    sizes = [int(cand_off[i + 1] - cand_off[i]) for i in range(k)]
    found = []
    if any(s == 0 for s in sizes):
        return np.empty((0, n), dtype=np.int64)
    idx = [0] * k
    imgs = np.empty(k, dtype=np.int64)
    out = np.empty(n, dtype=np.int64)
    seen = np.zeros(m, dtype=np.int64)
    stamp = 0
    while True:
        for i in range(k):
            imgs[i] = cand_flat[cand_off[i] + idx[i]]
        if _extend_hom_py(src, gens, dst, imgs, out):
            ok = True
            if bijective:
                stamp += 1
                for v in out.tolist():
                    if seen[v] == stamp:
                        ok = False
                        break
                    seen[v] = stamp
            if ok:
                found.append(out.copy())
        j = k - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < sizes[j]:
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            break
    if not found:
        return np.empty((0, n), dtype=np.int64)
    return np.array(found, dtype=np.int64)


def _search_homs_nb(src, gens, dst, cand_flat, cand_off, bijective):
    n = src.shape[0]
    m = dst.shape[0]
    k = gens.shape[0]
    total = 1
    for i in range(k):
        s = cand_off[i + 1] - cand_off[i]
        if s == 0:
            return np.empty((0, n), dtype=np.int64)
        total *= s
    cap = 16
    res = np.empty((cap, n), dtype=np.int64)
    cnt = 0
    idx = np.zeros(k, dtype=np.int64)
    imgs = np.empty(k, dtype=np.int64)
    out = np.empty(n, dtype=np.int64)
    seen = np.zeros(m, dtype=np.int64)
    stamp = 0
    for _ in range(total):
        for i in range(k):
            imgs[i] = cand_flat[cand_off[i] + idx[i]]
        if _jit_extend_hom(src, gens, dst, imgs, out):
            ok = True
            if bijective:
                stamp += 1
                for x in range(n):
                    v = out[x]
                    if seen[v] == stamp:
                        ok = False
                        break
                    seen[v] = stamp
            if ok:
                if cnt == cap:
                    cap *= 2
                    bigger = np.empty((cap, n), dtype=np.int64)
                    bigger[:cnt] = res[:cnt]
                    res = bigger
                res[cnt] = out
                cnt += 1
        j = k - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < cand_off[j + 1] - cand_off[j]:
                break
            idx[j] = 0
            j -= 1
    return res[:cnt].copy()


# --- elimination over Z/p^e ------------------------------------------------------


def _valuation(x, p, e):
    if x == 0:
        return e
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _unit_inverse(u, q):
    # extended Euclid; u is a unit mod q
    a, b = u % q, q
    x0, x1 = 1, 0
    while b:
        t = a // b
        a, b = b, a - t * b
        x0, x1 = x1, x0 - t * x1
    return x0 % q


def _local_smith_np(M, p, e):
    """Diagonalise M over Z/p^e by row and column operations.

    Returns (vals, Q): vals[s] is the valuation of the s-th diagonal entry (length
    min(rows, cols), e for a zero pivot) and Q the accumulated column transform,
    so that M Q is row-equivalent to diag(p^vals).
    """
    q = p ** e
    A = np.array(M, dtype=np.int64) % q
    r, c = A.shape
    Q = np.eye(c, dtype=np.int64)
    steps = min(r, c)
    vals = np.full(steps, e, dtype=np.int64)
    for s in range(steps):
        sub = A[s:, s:]
        if not sub.any():
            break
        vv = np.full(sub.shape, e, dtype=np.int64)
        rest = sub.copy()
        nz = rest != 0
        vv[nz] = 0
        for _ in range(e):
            div = nz & (rest % p == 0)
            if not div.any():
                break
            vv[div] += 1
            rest[div] //= p
        flat = int(np.argmin(vv))
        i, j = divmod(flat, sub.shape[1])
        i += s
        j += s
        v = int(vv.flat[flat])
        if i != s:
            A[[s, i]] = A[[i, s]]
        if j != s:
            A[:, [s, j]] = A[:, [j, s]]
            Q[:, [s, j]] = Q[:, [j, s]]
        pv = p ** v
        u = int(A[s, s]) // pv
        A[s] = (A[s] * _unit_inverse(u, q)) % q
        col = A[s + 1:, s] // pv
        if col.any():
            A[s + 1:] = (A[s + 1:] - np.outer(col, A[s])) % q
        row = A[s, s + 1:] // pv
        if row.any():
            A[:, s + 1:] = (A[:, s + 1:] - np.outer(A[:, s], row)) % q
            Q[:, s + 1:] = (Q[:, s + 1:] - np.outer(Q[:, s], row)) % q
        vals[s] = v
    return vals, Q


def _local_smith_nb(M, p, e):
    q = 1
    for _ in range(e):
        q *= p
    r, c = M.shape
    A = np.empty((r, c), dtype=np.int64)
    for i in range(r):
        for j in range(c):
            A[i, j] = M[i, j] % q
    Q = np.zeros((c, c), dtype=np.int64)
    for j in range(c):
        Q[j, j] = 1
    steps = min(r, c)
    vals = np.full(steps, e, dtype=np.int64)
    for s in range(steps):
        best = e
        bi = -1
        bj = -1
        for i in range(s, r):
            for j in range(s, c):
                if A[i, j] != 0:
                    v = _jit_valuation(A[i, j], p, e)
                    if v < best:
                        best = v
                        bi = i
                        bj = j
                        if v == 0:
                            break
            if best == 0:
                break
        if bi < 0:
            break
        if bi != s:
            for j in range(c):
                t = A[s, j]
                A[s, j] = A[bi, j]
                A[bi, j] = t
        if bj != s:
            for i in range(r):
                t = A[i, s]
                A[i, s] = A[i, bj]
                A[i, bj] = t
            for i in range(c):
                t = Q[i, s]
                Q[i, s] = Q[i, bj]
                Q[i, bj] = t
        pv = 1
        for _ in range(best):
            pv *= p
        uinv = _jit_unit_inverse(A[s, s] // pv, q)
        for j in range(c):
            A[s, j] = (A[s, j] * uinv) % q
        for i in range(s + 1, r):
            f = A[i, s] // pv
            if f != 0:
                for j in range(s, c):
                    A[i, j] = (A[i, j] - f * A[s, j]) % q
        for j in range(s + 1, c):
            f = A[s, j] // pv
            if f != 0:
                for i in range(r):
                    A[i, j] = (A[i, j] - f * A[i, s]) % q
                for i in range(c):
                    Q[i, j] = (Q[i, j] - f * Q[i, s]) % q
        vals[s] = best
    return vals, Q


# --- orbits of a permutation group on pairs -----------------------------------------


def _pair_orbits_np(gen_images):
    """Label each pair (x, y) by the least flat index in its orbit under the
    diagonal action of the generators."""
    n = gen_images.shape[1]
    labels = np.arange(n * n, dtype=np.int64).reshape(n, n)
    while True:
        old = labels
        for g in gen_images:
            # pair (x, y) and (g x, g y) share an orbit
            moved = np.empty_like(labels)
            moved[np.ix_(g, g)] = labels
            labels = np.minimum(labels, moved)
            back = labels[np.ix_(g, g)]
            labels = np.minimum(labels, back)
        if np.array_equal(old, labels):
            return labels.reshape(-1)


def _pair_orbits_nb(gen_images):
    n = gen_images.shape[1]
    nn = n * n
    parent = np.arange(nn)
    for gi in range(gen_images.shape[0]):
        g = gen_images[gi]
        for x in range(n):
            for y in range(n):
                a = x * n + y
                b = g[x] * n + g[y]
                while parent[a] != a:
                    a = parent[a]
                while parent[b] != b:
                    b = parent[b]
                if a < b:
                    parent[b] = a
                elif b < a:
                    parent[a] = b
    out = np.empty(nn, dtype=np.int64)
    for a in range(nn):
        r = a
        while parent[r] != r:
            r = parent[r]
        out[a] = r
    return out


NUMPY_KERNELS = SimpleNamespace(
    name="numpy",
    extend_hom=_extend_hom_py,
    is_hom=_is_hom_np,
    search_homs=_search_homs_py,
    local_smith=_local_smith_np,
    pair_orbits=_pair_orbits_np,
)


if numba is not None:
    # module-level jitted helpers so the on-disk cache can be reused across runs
    _jit = numba.njit(cache=True)
    _jit_extend_hom = _jit(_extend_hom_nb)
    _jit_valuation = _jit(_valuation)
    _jit_unit_inverse = _jit(_unit_inverse)


def _build_numba():
    return SimpleNamespace(
        name="numba",
        extend_hom=_jit_extend_hom,
        is_hom=_jit(_is_hom_nb),
        search_homs=_jit(_search_homs_nb),
        local_smith=_jit(_local_smith_nb),
        pair_orbits=_jit(_pair_orbits_nb),
    )


NUMBA_KERNELS = _build_numba() if numba is not None else None

K = NUMBA_KERNELS if USE_NUMBA else NUMPY_KERNELS


def backends():
    """Kernel namespaces available in this process (numpy always, numba if importable)."""
    out = [NUMPY_KERNELS]
    if NUMBA_KERNELS is not None:
        out.append(NUMBA_KERNELS)
    return out
