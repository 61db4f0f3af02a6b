"""B-equivariant endomorphisms of V = K[B/H] for B = BS(1, m+1), H = <h>, and the
non-Hopfian endomorphism theta of Z/m wr_X B built from them.

An endomorphism is stored as the image w of the base point v; the image of
g.v is g.w, which is well defined exactly when h.w = w.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .abelian import AbelianSpec
from .bsgroup import (BSBackend, BSElement, CosetPoint, base_point, bs_h, bs_t, coset_act,
                      coset_canonical)
from .scalars import IntegersMod, LocalizedInt, NotInvertible
from .wreath import ModuleVector, WreathElement, WreathGroup


class NotInvariant(ValueError):
    pass


class Combination:
    """A finite K-linear combination of coset points."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring, terms: Dict[CosetPoint, object] | Iterable = ()):
        self.ring = ring
        acc: Dict[CosetPoint, object] = {}
        pairs = terms.items() if isinstance(terms, dict) else terms
        zero = ring.zero()
        for x, c in pairs:
            acc[x] = acc.get(x, zero) + ring(c)
        self._terms = tuple(sorted(((x, c) for x, c in acc.items() if c != 0),
                                   key=lambda kv: kv[0].sort_key()))

    @classmethod
    def point(cls, ring, x: CosetPoint, c=1) -> "Combination":
        return cls(ring, [(x, c)])

    def terms(self):
        return self._terms

    @property
    def support(self) -> Tuple[CosetPoint, ...]:
        return tuple(x for x, _ in self._terms)

    def coefficient(self, x: CosetPoint):
        for y, c in self._terms:
            if y == x:
                return c
        return self.ring.zero()

    def __add__(self, other: "Combination"):
        return Combination(self.ring, list(self._terms) + list(other._terms))

    def __neg__(self):
        return Combination(self.ring, [(x, -c) for x, c in self._terms])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "Combination":
        s = self.ring(s)
        return Combination(self.ring, [(x, s * c) for x, c in self._terms])

    def act(self, g: BSElement) -> "Combination":
        return Combination(self.ring, [(coset_act(g, x), c) for x, c in self._terms])

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, Combination):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{x!r}" for x, c in self._terms)


def h_generator(k: int) -> BSElement:
    return bs_h(k, 1)


def endo_check_invariant(w: Combination, k: int) -> bool:
    return w.act(h_generator(k)) == w


@dataclass(frozen=True)
class InducedEndo:
    w: Combination
    k: int

    @property
    def ring(self):
        return self.w.ring

    def __post_init__(self):
        if not endo_check_invariant(self.w, self.k):
            raise NotInvariant(f"h does not fix {self.w!r}")

    @classmethod
    def identity(cls, ring, k: int) -> "InducedEndo":
        return cls(Combination.point(ring, base_point(k)), k)

    def scale(self, s) -> "InducedEndo":
        return InducedEndo(self.w.scale(s), self.k)

    def __call__(self, u: Combination) -> Combination:
        return endo_apply(self, u)


def endo_apply(phi: InducedEndo, u: Combination) -> Combination:
    if u.ring != phi.ring:
        raise ValueError(f"ring mismatch {u.ring} vs {phi.ring}")
    out: List = []
    for x, c in u.terms():
        g = x.representative()
        out.extend((y, c * d) for y, d in phi.w.act(g).terms())
    return Combination(phi.ring, out)


def endo_compose(phi: InducedEndo, psi: InducedEndo) -> InducedEndo:
    """phi o psi."""
    if phi.ring != psi.ring or phi.k != psi.k:
        raise ValueError("composing endomorphisms over different rings")
    return InducedEndo(endo_apply(phi, psi.w), phi.k)


def alpha(m: int, ring) -> InducedEndo:
    """v -> t.v"""
    k = m + 1
    return InducedEndo(Combination.point(ring, coset_canonical(bs_t(k))), k)


def beta(m: int, ring) -> InducedEndo:
    """v -> (1 + h + ... + h^m) t^-1 . v"""
    k = m + 1
    tinv = bs_t(k).inverse()
    pts = [(coset_canonical(bs_h(k, j) * tinv), 1) for j in range(k)]
    return InducedEndo(Combination(ring, pts), k)


def _check_m(m: int):
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"m must be an integer >= 2, got {m!r}")


@dataclass
class CounterexampleReport:
    m: int
    ring: str
    left_inverse: bool
    right_inverse: bool
    ba_support_size: int
    ba_image: str
    annihilator_kills_ba: bool
    annihilator_kills_scaled_v: bool
    alpha_invariant: bool
    beta_invariant: bool

    def ok(self) -> bool:
        return (self.left_inverse and not self.right_inverse
                and self.ba_support_size == self.m + 1
                and self.annihilator_kills_ba and not self.annihilator_kills_scaled_v)

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def verify_counterexample(m: int, ring) -> CounterexampleReport:
    """Check (1/(m+1)) alpha beta = id and beta alpha != (m+1) id in End_KB(K[B/H])."""
    _check_m(m)
    k = m + 1
    if not ring.is_unit(k):
        raise NotInvertible(f"m+1 = {k} is not a unit in {ring}")
    a, b = alpha(m, ring), beta(m, ring)
    inv = ring.inverse(k)
    ident = InducedEndo.identity(ring, k)
    ab = endo_compose(a.scale(inv), b)
    ba = endo_compose(b, a)
    v = ident.w
    # (1 - h^(1/(m+1))) kills beta alpha(v) but not (m+1) v
    root = bs_h(k, LocalizedInt(1, 1, k))
    ann = lambda u: u - u.act(root)
    return CounterexampleReport(
        m=m,
        ring=repr(ring),
        left_inverse=ab.w == ident.w,
        right_inverse=endo_compose(b, a.scale(inv)).w == ident.w,
        ba_support_size=len(ba.w.support),
        ba_image=repr(ba.w),
        annihilator_kills_ba=ann(ba.w).is_zero(),
        annihilator_kills_scaled_v=ann(v.scale(k)).is_zero(),
        alpha_invariant=endo_check_invariant(a.w, k),
        beta_invariant=endo_check_invariant(b.w, k),
    )


# --- the non-Hopfian endomorphism of Z/m wr_X B ---------------------------------


def theta_group(m: int) -> WreathGroup:
    _check_m(m)
    return WreathGroup(BSBackend(m + 1), AbelianSpec((m,)))


def _to_combination(mv: ModuleVector, ring) -> Combination:
    return Combination(ring, [(x, a.coords[0]) for x, a in mv.items()])


def _to_module(c: Combination, spec: AbelianSpec) -> ModuleVector:
    return ModuleVector(spec, [(x, (int(s),)) for x, s in c.terms()])


class Theta:
    """theta(mv, b) = ((1/(m+1)) alpha(mv), b) on Z/m wr_X B; 1/(m+1) = 1 in Z/m."""

    def __init__(self, m: int):
        _check_m(m)
        self.m = m
        self.group = theta_group(m)
        self.ring = IntegersMod(m)
        self.scale = self.ring.inverse(m + 1)
        self.alpha = alpha(m, self.ring).scale(self.scale)
        self.beta = beta(m, self.ring)

    def on_module(self, mv: ModuleVector) -> ModuleVector:
        return _to_module(endo_apply(self.alpha, _to_combination(mv, self.ring)), self.group.spec)

    def __call__(self, g: WreathElement) -> WreathElement:
        if g.group != self.group:
            raise ValueError("element of a different wreath product")
        return self.group.element(self.on_module(g.mv), g.b)


def build_theta(m: int) -> Theta:
    return Theta(m)


def theta_kernel_witness(m: int) -> WreathElement:
    """beta alpha(v) - (m+1) v, reduced mod m, sitting in M."""
    th = Theta(m)
    ring = th.ring
    ba = endo_compose(th.beta, alpha(m, ring))
    v = base_point(m + 1)
    mv = _to_module(ba.w - Combination.point(ring, v, m + 1), th.group.spec)
    return th.group.element(mv)


def theta_preimage(g: WreathElement, m: int) -> WreathElement:
    th = Theta(m)
    comb = endo_apply(th.beta, _to_combination(g.mv, th.ring))
    # alpha(beta(x)) = (m+1) x, and theta carries the 1/(m+1)
    return th.group.element(_to_module(comb, th.group.spec), g.b)


# --- random elements for spot checks ----------------------------------------------


def random_bs_element(rng: random.Random, k: int, max_level: int = 3, max_exp: int = 2,
                      max_num: int = 20) -> BSElement:
    e = rng.randint(0, max_exp)
    a = LocalizedInt(rng.randint(-max_num, max_num), e, k)
    return BSElement(a, rng.randint(-max_level, max_level))


def random_coset_point(rng: random.Random, k: int, max_level: int = 6, max_exp: int = 2) -> CosetPoint:
    e = rng.randint(0, max_exp)
    res = LocalizedInt(rng.randrange(k ** e), e, k)
    return CosetPoint(rng.randint(-max_level, max_level), res)


def random_wreath_element(rng: random.Random, group: WreathGroup, max_support: int = 4,
                          max_level: int = 6) -> WreathElement:
    k = group.backend.k
    d = group.spec.invariants[0]
    values = [(random_coset_point(rng, k, max_level), (rng.randrange(d),))
              for _ in range(rng.randint(0, max_support))]
    return group.element(ModuleVector(group.spec, values), random_bs_element(rng, k))


@dataclass
class ThetaCertificate:
    m: int
    hom_checks: int
    hom_failures: int
    generator_identity_failures: int
    preimage_checks: int
    preimage_failures: int
    witness: str
    witness_nontrivial: bool
    witness_in_kernel: bool
    witness_support_size: int

    def ok(self) -> bool:
        return (self.hom_failures == 0 and self.generator_identity_failures == 0
                and self.preimage_failures == 0 and self.witness_nontrivial
                and self.witness_in_kernel)

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def certify_theta(m: int, hom_trials: int = 500, preimage_trials: int = 200,
                  seed: int = 0) -> ThetaCertificate:
    """Spot-check that theta is a surjective, non-injective endomorphism."""
    th = Theta(m)
    G = th.group
    k = m + 1
    rng = random.Random(seed)
    hom_fail = 0
    for _ in range(hom_trials):
        g = random_wreath_element(rng, G)
        h = random_wreath_element(rng, G)
        if th(g * h) != th(g) * th(h):
            hom_fail += 1
    # theta(b m b^-1) = theta(b) theta(m) theta(b)^-1 on generators
    gen_fail = 0
    gens = [bs_h(k), bs_t(k)]
    gens += [g.inverse() for g in gens]
    v = base_point(k)
    mods = [G.element({v: (1,)}), G.element({coset_canonical(bs_t(k)): (1,)}),
            G.element({coset_canonical(bs_h(k, LocalizedInt(1, 1, k))): (1,)})]
    for b in gens:
        bb = G.element(None, b)
        for mm in mods:
            if th(bb * mm * bb.inverse()) != th(bb) * th(mm) * th(bb).inverse():
                gen_fail += 1
    pre_fail = 0
    for _ in range(preimage_trials):
        g = random_wreath_element(rng, G)
        if th(theta_preimage(g, m)) != g:
            pre_fail += 1
    w = theta_kernel_witness(m)
    return ThetaCertificate(
        m=m,
        hom_checks=hom_trials,
        hom_failures=hom_fail,
        generator_identity_failures=gen_fail,
        preimage_checks=preimage_trials,
        preimage_failures=pre_fail,
        witness=repr(w),
        witness_nontrivial=not w.is_identity(),
        witness_in_kernel=th(w).is_identity(),
        witness_support_size=len(w.mv),
    )
