"""Automorphisms of B and of G = A wr_X B: brute-force enumeration, the lifts
psi / rho of Aut(B), the maps nu_b, and the decomposition theta = theta2 theta1."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..abelian import AbelianSpec
from . import _kernels
from .actions import (exponent_two_condition, nonabelian_class_check, orbits_stabs,
                      stab_permutation_check)
from .endo import intertwiner_basis
from .groups import FiniteAction, FiniteGroup
from .module import BoundExceeded, FiniteModule, FiniteWreath, ModuleMap


DEFAULT_MAX_AUT_ORDER = 200


class HypothesisError(ValueError):
    """A conditional result was requested while one of its hypotheses fails."""

    def __init__(self, failed: Sequence[str]):
        self.failed = list(failed)
        super().__init__("failed hypotheses: " + ", ".join(self.failed))


class PsiError(ValueError):
    pass


# -- brute force ----------------------------------------------------------------------


def _gen_search_order(group: FiniteGroup) -> List[int]:
    """A generating set of least size, found quickly for the groups we meet."""
    if group.order == 1:
        return []
    orders = group.element_orders()
    by_order = sorted(range(1, group.order), key=lambda g: (-orders[g], g))
    for a in by_order:
        if len(group.generated([a])) == group.order:
            return [a]
    for a in by_order:
        span_a = set(group.generated([a]))
        for b in range(1, group.order):
            if b in span_a:
                continue
            if len(group.generated([a, b])) == group.order:
                return [a, b]
    return group.generators


def homomorphisms(src: FiniteGroup, dst: FiniteGroup, gens: Optional[Sequence[int]] = None,
                  bijective: bool = False) -> np.ndarray:
    """All homomorphisms src -> dst as image tables (rows), in lexicographic order."""
    if gens is None:
        gens = _gen_search_order(src)
    gens = np.array(gens, dtype=np.int64)
    so = src.element_orders()
    do = dst.element_orders()
    cands = []
    for g in gens:
        if bijective:
            c = np.nonzero(do == so[g])[0]
        else:
            c = np.nonzero(so[g] % do == 0)[0]
        cands.append(c.astype(np.int64))
    off = np.zeros(len(cands) + 1, dtype=np.int64)
    for i, c in enumerate(cands):
        off[i + 1] = off[i] + len(c)
    flat = np.concatenate(cands) if cands else np.zeros(0, dtype=np.int64)
    if len(gens) == 0:
        return np.zeros((1, src.order), dtype=np.int64)
    res = _kernels.K.search_homs(src.table, gens, dst.table, flat, off, bijective)
    if len(res) == 0:
        return res
    order = np.lexsort(res.T[::-1])
    return res[order]


def aut_brute(group: FiniteGroup, max_order: int = DEFAULT_MAX_AUT_ORDER) -> np.ndarray:
    """Every automorphism of a finite group, by generator-image search."""
    if group.order > max_order:
        raise BoundExceeded(f"|G| = {group.order} exceeds the brute-force bound {max_order}")
    return homomorphisms(group, group, bijective=True)


def inner_automorphism(group: FiniteGroup, b: int) -> np.ndarray:
    """h -> b h b^-1"""
    T = group.table
    return T[T[b], group.inv[b]]


def inner_automorphisms(group: FiniteGroup) -> List[np.ndarray]:
    seen = {}
    for b in range(group.order):
        a = inner_automorphism(group, b)
        seen.setdefault(a.tobytes(), a)
    return list(seen.values())


def compose_maps(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """f o g"""
    return f[g]


def invert_map(f: np.ndarray) -> np.ndarray:
    inv = np.empty_like(f)
    inv[f] = np.arange(len(f))
    return inv


# -- psi, rho, nu -----------------------------------------------------------------------


def psi_construct(action: FiniteAction, sigma: Sequence[int]) -> np.ndarray:
    """A permutation psi of X with psi(g x) = sigma(g) psi(x).

    For each orbit i (in order) pick the least unused orbit j, then the least g0,
    with sigma(H_i) = g0 H_j g0^-1, and send g x_i to sigma(g) g0 x_j.
    """
    B = action.group
    T = B.table
    sig = np.asarray(sigma, dtype=np.int64)
    od = orbits_stabs(action)
    stabs = [frozenset(H) for H in od.stabilizers]
    used = set()
    psi = np.full(action.n, -1, dtype=np.int64)
    for i, xi in enumerate(od.reps):
        target = frozenset(int(sig[h]) for h in stabs[i])
        choice = None
        for j in range(len(od.reps)):
            if j in used or len(stabs[j]) != len(target):
                continue
            for g0 in range(B.order):
                conj = frozenset(int(T[T[g0, h], B.inv[g0]]) for h in stabs[j])
                if conj == target:
                    choice = (j, g0)
                    break
            if choice:
                break
        if choice is None:
            raise PsiError(f"no orbit stabiliser is conjugate to sigma(H_{i}); "
                           "Aut(B) does not permute the point stabilisers")
        j, g0 = choice
        used.add(j)
        xj = od.reps[j]
        for x in od.orbits[i]:
            g = int(np.nonzero(action.images[:, xi] == x)[0][0])
            psi[x] = action.images[T[sig[g], g0], xj]
    if sorted(psi.tolist()) != list(range(action.n)):
        raise PsiError("constructed psi is not a permutation")
    return psi


def check_good(action: FiniteAction, sigma: Sequence[int], psi: Sequence[int]) -> bool:
    """psi(g x) = sigma(g) psi(x) for all g, x."""
    imgs = action.images
    sig = np.asarray(sigma)
    ps = np.asarray(psi)
    return bool(np.array_equal(ps[imgs], imgs[sig][:, ps]))


def rho_embed(wreath: FiniteWreath, sigma: Sequence[int], psi: Optional[Sequence[int]] = None) -> np.ndarray:
    """rho(sigma) on G as an image table: m b -> psi_*(m) sigma(b)."""
    if psi is None:
        psi = psi_construct(wreath.action, sigma)
    sig = np.asarray(sigma, dtype=np.int64)
    mod = wreath.module
    pm = ModuleMap.from_point_map(mod, psi)
    nB = wreath.B.order
    vecs = mod.all_vectors(bound=wreath.order)
    weights = _weights(mod)
    new_codes = (pm.F @ vecs.T % mod.moduli[:, None]).T @ weights if mod.dim else np.zeros(1, np.int64)
    out = (new_codes[:, None] * nB + sig[None, :]).reshape(-1)
    return out.astype(np.int64)


def _weights(mod: FiniteModule) -> np.ndarray:
    if not mod.dim:
        return np.zeros(0, dtype=np.int64)
    return np.cumprod(np.concatenate([[1], mod.moduli[:-1]])).astype(np.int64)


def nu_map(module: FiniteModule, b0: int, psi_inner: Optional[Sequence[int]] = None) -> ModuleMap:
    """nu_b0(a x) = a (b0 * psi(I_b0)^-1 (x))."""
    action = module.action
    if psi_inner is None:
        psi_inner = psi_construct(action, inner_automorphism(action.group, b0))
    pinv = invert_map(np.asarray(psi_inner, dtype=np.int64))
    f = action.images[b0][pinv]
    return ModuleMap.from_point_map(module, f)


@dataclass
class NuDeltaReport:
    b0: int
    nu: ModuleMap
    equivariant: bool
    bijective: bool
    antihom_pairs_checked: int
    antihom_failures: int


def nu_delta(action: FiniteAction, A: AbelianSpec, b0: int, pairs: Optional[Sequence] = None,
             seed: int = 0) -> NuDeltaReport:
    """Build nu_b0 and check that it is a module isomorphism and that delta: b -> nu_b
    reverses products."""
    mod = FiniteModule(action, A)
    B = action.group
    nus = {b: nu_map(mod, b) for b in range(B.order)}
    if pairs is None:
        pairs = [(a, b) for a in range(B.order) for b in range(B.order)]
    fails = sum(1 for a, b in pairs if nus[B.mul(a, b)] != nus[b] * nus[a])
    nu = nus[b0]
    return NuDeltaReport(b0, nu, nu.is_equivariant(), nu.is_bijective(), len(pairs), fails)


# -- Iso_ZB(AX) -----------------------------------------------------------------------------


def _endo_entries(invariants: Sequence[int]) -> List[List[List[int]]]:
    """entries[a][b] = the possible images of the generator of Z/d_b in Z/d_a."""
    out = []
    for da in invariants:
        row = []
        for db in invariants:
            step = da // np.gcd(da, db)
            row.append(list(range(0, da, step)))
        out.append(row)
    return out


def module_endomorphisms(module: FiniteModule, max_count: int = 200000) -> List[ModuleMap]:
    """All ZB-endomorphisms of AX: for each orbital O an element phi_O of End(A),
    F[(y, a), (x, b)] = sum_O E_O[y, x] phi_O[a, b]."""
    orbitals = intertwiner_basis(module.action)
    r = module.r
    if r == 0:
        return [ModuleMap.identity(module)]
    inv = list(module.A.invariants)
    entries = _endo_entries(inv)
    slots = [(a, b) for a in range(r) for b in range(r)]
    end_a = [[]]
    for a, b in slots:
        end_a = [e + [c] for e in end_a for c in entries[a][b]]
    total = len(end_a) ** len(orbitals)
    if total > max_count:
        raise BoundExceeded(f"{total} module endomorphisms exceed {max_count}")
    out = []
    for choice in np.ndindex(*([len(end_a)] * len(orbitals))):
        F = np.zeros((module.dim, module.dim), dtype=np.int64)
        for O, ci in zip(orbitals, choice):
            phi = np.array(end_a[ci], dtype=np.int64).reshape(r, r)
            F += np.kron(O, phi)
        out.append(ModuleMap(module, F))
    return out


def iso_group(action: FiniteAction, A: AbelianSpec, max_count: int = 200000) -> List[ModuleMap]:
    """Iso_ZB(AX): the invertible module endomorphisms, assembled from the primary parts."""
    if not A.is_finite():
        from .module import InfiniteCoefficients
        raise InfiniteCoefficients(f"Iso_ZB(AX) is not enumerable for infinite A = {A}")
    full = FiniteModule(action, A)
    if full.r == 0:
        return [ModuleMap.identity(full)]
    from ..abelian import primary_decompose
    parts = primary_decompose(full.A)
    blocks = []
    for p, Ap in parts.items():
        sub = FiniteModule(action, Ap)
        units = [f for f in module_endomorphisms(sub, max_count) if f.is_bijective()]
        blocks.append((Ap, units))
    # primary parts occupy consecutive factor slots in the primary form
    r = full.r
    out = []
    offsets = []
    off = 0
    for Ap, _ in blocks:
        offsets.append(off)
        off += len(Ap.invariants)
    count = 1
    for _, units in blocks:
        count *= len(units)
    if count > max_count:
        raise BoundExceeded(f"|Iso| = {count} exceeds {max_count}")
    for combo in np.ndindex(*[len(u) for _, u in blocks]):
        F = np.zeros((full.dim, full.dim), dtype=np.int64)
        for (Ap, units), o, ci in zip(blocks, offsets, combo):
            rp = len(Ap.invariants)
            Fp = units[ci].F
            for y in range(action.n):
                for x in range(action.n):
                    F[y * r + o:y * r + o + rp, x * r + o:x * r + o + rp] = \
                        Fp[y * rp:(y + 1) * rp, x * rp:(x + 1) * rp]
        out.append(ModuleMap(full, F))
    return out


def iso_group_exhaustive(action: FiniteAction, A: AbelianSpec, max_size: int = 4096) -> List[ModuleMap]:
    """Iso_ZB(AX) by exhaustive search over images of the orbit generators a_i x_rep.

    Independent of the orbital construction; for |AX| <= max_size only.
    """
    mod = FiniteModule(action, A)
    if mod.size > max_size:
        raise BoundExceeded(f"|AX| = {mod.size} exceeds {max_size}")
    if mod.r == 0:
        return [ModuleMap.identity(mod)]
    od = orbits_stabs(action)
    vecs = mod.all_vectors(bound=max_size)
    inv = mod.A.invariants
    # admissible images of a_i x_rep: fixed by stab(x_rep) and killed by d_i
    slots = []
    for rep, H in zip(od.reps, od.stabilizers):
        for i, d in enumerate(inv):
            ok = np.ones(len(vecs), dtype=bool)
            for h in H:
                ok &= np.all(vecs[:, mod.act_src[h]] == vecs, axis=1)
            ok &= np.all((vecs * d) % mod.moduli == 0, axis=1)
            slots.append((rep, i, np.nonzero(ok)[0]))
    out = []
    B = action.group
    for choice in np.ndindex(*[len(s[2]) for s in slots]):
        F = np.zeros((mod.dim, mod.dim), dtype=np.int64)
        for (rep, i, cand), ci in zip(slots, choice):
            img = vecs[cand[ci]]
            orbit = od.orbits[od.reps.index(rep)]
            for x in orbit:
                g = int(np.nonzero(action.images[:, rep] == x)[0][0])
                F[:, x * mod.r + i] = mod.act(g, img)
        f = ModuleMap(mod, F)
        images = {mod.encode(f(v)) for v in vecs}
        if len(images) == mod.size:
            out.append(f)
    return out


# -- hypotheses and the decomposition ------------------------------------------------


def decomposition_hypotheses(action: FiniteAction, A: AbelianSpec,
                             auts_B: Optional[np.ndarray] = None) -> Dict[str, bool]:
    """The conditions under which automorphisms/epimorphisms of G split through rho."""
    if auts_B is None:
        auts_B = aut_brute(action.group)
    classes = nonabelian_class_check(action)
    return {
        "B_hopfian": True,
        "A_exponent_two_D_no_involution": exponent_two_condition(action, A),
        "aut_B_permutes_stabilizers": stab_permutation_check(action, auts_B),
        "D_classes_nonabelian": all(classes.values()),
    }


def _require(hyp: Dict[str, bool]):
    failed = [k for k, v in hyp.items() if not v]
    if failed:
        raise HypothesisError(failed)


@dataclass
class ThetaDecomposition:
    sigma: np.ndarray
    theta1: np.ndarray
    theta2: np.ndarray
    gamma: np.ndarray          # gamma[b] = vector part of theta2(b)
    theta2_module: ModuleMap
    hypotheses: Dict[str, bool] = field(default_factory=dict)

    def recomposes(self, theta: np.ndarray) -> bool:
        return bool(np.array_equal(self.theta2[self.theta1], theta))


def theta_decompose(wreath: FiniteWreath, theta: Sequence[int],
                    auts_B: Optional[np.ndarray] = None) -> ThetaDecomposition:
    """Split a surjective endomorphism theta of G as theta2 o theta1 with theta1 = rho(sigma)."""
    action = wreath.action
    hyp = decomposition_hypotheses(action, wreath.A, auts_B)
    _require(hyp)
    th = np.asarray(theta, dtype=np.int64)
    G = wreath.group
    if len(np.unique(th)) != G.order:
        raise ValueError("theta is not surjective")
    if not _kernels.K.is_hom(G.table, G.table, th):
        raise ValueError("theta is not a homomorphism")
    nB = wreath.B.order
    mod = wreath.module
    sigma = th[np.arange(nB)] % nB
    theta1 = rho_embed(wreath, sigma)
    theta2 = th[invert_map(theta1)]
    gamma = np.zeros((nB, mod.dim), dtype=np.int64)
    for b in range(nB):
        v, bb = wreath.split(int(theta2[b]))
        if bb != b:
            raise ValueError("pi o theta2 is not the identity on B")
        gamma[b] = v
    cols = []
    for j in range(mod.dim):
        e = mod.zero()
        e[j] = 1
        v, bb = wreath.split(int(theta2[wreath.embed_m(e)]))
        if bb != 0:
            raise ValueError("theta2 does not preserve M")
        cols.append(v)
    F = np.array(cols, dtype=np.int64).T if cols else np.zeros((0, 0), dtype=np.int64)
    return ThetaDecomposition(sigma, theta1, theta2, gamma, ModuleMap(mod, F), hyp)


def principal_derivation(module: FiniteModule, m0) -> np.ndarray:
    """gamma_m0(b) = (1 - b) o m0, one row per b."""
    B = module.action.group
    m0 = module.reduce(m0)
    return np.array([module.reduce(m0 - module.act(b, m0)) for b in range(B.order)], dtype=np.int64)


def inner_of_G(wreath: FiniteWreath, g: int) -> np.ndarray:
    return inner_automorphism(wreath.group, g)


# -- orders of Aut(G) and Out(G) -----------------------------------------------------------


@dataclass
class AutOrders:
    der: int
    pder: int
    h1: int
    iso: int
    aut_B: int
    inn_B: int
    out_B: int
    delta_center: int
    aut_formula: int
    out_formula: int
    hypotheses: Dict[str, bool]

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def aut_out_orders(action: FiniteAction, A: AbelianSpec, auts_B: Optional[np.ndarray] = None,
                   max_iso: int = 200000) -> AutOrders:
    """|Aut(G)| = |Der| |Iso| |Aut(B)| and |Out(G)| = |H^1| |Iso/delta(Z(B))| |Out(B)|."""
    from .cohomology import derivations_h1
    B = action.group
    if auts_B is None:
        auts_B = aut_brute(B)
    hyp = decomposition_hypotheses(action, A, auts_B)
    hyp.pop("B_hopfian")
    _require(hyp)
    h = derivations_h1(action, A)
    iso = iso_group(action, A, max_iso)
    center = B.center()
    inn_B = B.order // len(center)
    mod = FiniteModule(action, A)
    dz = {nu_map(mod, z).key() for z in center}
    aut_B = len(auts_B)
    out_B = aut_B // inn_B
    aut = h.der_order * len(iso) * aut_B
    out = h.h1_order * (len(iso) // len(dz)) * out_B
    return AutOrders(h.der_order, h.pder_order, h.h1_order, len(iso), aut_B, inn_B, out_B,
                     len(dz), aut, out, hyp)


def aut_order_formula(action: FiniteAction, A: AbelianSpec, **kw) -> AutOrders:
    return aut_out_orders(action, A, **kw)


def out_order(action: FiniteAction, A: AbelianSpec, **kw) -> AutOrders:
    return aut_out_orders(action, A, **kw)


def inn_order_brute(wreath: FiniteWreath) -> int:
    return wreath.order // wreath.center_order()
