"""The Baumslag-Solitar group BS(1, k) = <h, t | t^-1 h t = h^k> as Z[1/k] x| Z,
and its coset space X = B/<h>.

An element (a, n) multiplies by (a, n)(b, p) = (a + k^-n b, n + p); t = (0, 1) and
h = (1, 0).  The coset of (a, n) modulo H = <h> is recorded by the level n and the
fractional part of k^n a.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .scalars import BaseMismatch, LocalizedInt


@dataclass(frozen=True)
class BSElement:
    a: LocalizedInt
    n: int

    @property
    def k(self) -> int:
        return self.a.base

    def __mul__(self, other: "BSElement") -> "BSElement":
        return bs_mul(self, other)

    def inverse(self) -> "BSElement":
        return BSElement(-(self.a.shift(self.n)), -self.n)

    def __pow__(self, e: int) -> "BSElement":
        if e < 0:
            return self.inverse() ** (-e)
        out = bs_identity(self.k)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __repr__(self):
        return f"({self.a}, {self.n})"


def bs_identity(k: int) -> BSElement:
    return BSElement(LocalizedInt(0, 0, k), 0)


def bs_t(k: int) -> BSElement:
    return BSElement(LocalizedInt(0, 0, k), 1)


def bs_h(k: int, q=1) -> BSElement:
    """h^q for q in Z[1/k]; fractional q gives the roots h^(j/k^e) inside B."""
    if isinstance(q, LocalizedInt):
        return BSElement(q, 0)
    return BSElement(LocalizedInt.from_fraction(Fraction(q), k), 0)


def bs_element(a, n: int, k: int) -> BSElement:
    if not isinstance(a, LocalizedInt):
        a = LocalizedInt.from_fraction(Fraction(a), k)
    return BSElement(a, n)


def bs_mul(g: BSElement, h: BSElement) -> BSElement:
    if g.k != h.k:
        raise BaseMismatch(f"BS(1,{g.k}) vs BS(1,{h.k})")
    return BSElement(g.a + h.a.shift(-g.n), g.n + h.n)


@dataclass(frozen=True)
class CosetPoint:
    level: int
    residue: LocalizedInt

    def sort_key(self):
        return (self.level, self.residue.to_fraction())

    def __lt__(self, other: "CosetPoint"):
        return self.sort_key() < other.sort_key()

    def representative(self) -> BSElement:
        return BSElement(self.residue.shift(-self.level), self.level)

    def __repr__(self):
        return f"<{self.level}, {self.residue}>"


def base_point(k: int) -> CosetPoint:
    return CosetPoint(0, LocalizedInt(0, 0, k))


def coset_canonical(g: BSElement) -> CosetPoint:
    return CosetPoint(g.n, g.a.shift(g.n).frac())


def coset_act(g: BSElement, x: CosetPoint) -> CosetPoint:
    if g.k != x.residue.base:
        raise BaseMismatch(f"BS(1,{g.k}) acting on coset of base {x.residue.base}")
    level = g.n + x.level
    return CosetPoint(level, (g.a.shift(level) + x.residue).frac())


def in_H(g: BSElement) -> bool:
    return g.n == 0 and g.a.is_integer()


_TOKEN = re.compile(r"^(h|t)(?:\^(-?\d+|\{(-?\d+)(?:/(\d+))?\}))?$")


def parse_word(word: str, k: int) -> BSElement:
    """Fold a whitespace-separated word in h, t into normal form.

    Tokens: ``h``, ``h^-1``, ``t``, ``t^-1``, ``t^3``, ``h^{p/q}`` with q a power of k.
    """
    out = bs_identity(k)
    for tok in word.split():
        mt = _TOKEN.match(tok)
        if not mt:
            raise ValueError(f"bad token {tok!r}")
        gen, plain, num, den = mt.group(1), mt.group(2), mt.group(3), mt.group(4)
        if plain is None:
            exp = Fraction(1)
        elif num is not None:
            exp = Fraction(int(num), int(den) if den else 1)
        else:
            exp = Fraction(int(plain))
        if gen == "t":
            if exp.denominator != 1:
                raise ValueError(f"fractional power of t in {tok!r}")
            out = out * bs_t(k) ** int(exp)
        else:
            out = out * bs_h(k, exp)
    return out


class BSBackend:
    """Action backend for the left action of BS(1, k) on B/<h>."""

    finite = False

    def __init__(self, k: int):
        if k < 2:
            raise ValueError("k must be >= 2")
        self.k = k
        self.identity = bs_identity(k)

    def mul(self, g, h):
        return bs_mul(g, h)

    def inv(self, g):
        return g.inverse()

    def act(self, g, x):
        return coset_act(g, x)

    def point_key(self, x: CosetPoint):
        return x.sort_key()

    def points(self):
        raise TypeError("the Baumslag-Solitar coset space is infinite")

    def __eq__(self, other):
        return isinstance(other, BSBackend) and other.k == self.k

    def __hash__(self):
        return hash(("BS", self.k))
