"""Exact coefficient arithmetic: the localized ring Z[1/k] and residues mod N."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import gcd


class BaseMismatch(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


@total_ordering
class LocalizedInt:
    """numerator / base**exponent, kept canonical (base does not divide the numerator
    unless exponent == 0)."""

    __slots__ = ("numerator", "exponent", "base")

    def __init__(self, numerator: int, exponent: int = 0, base: int = 2):
        if base < 2:
            raise ValueError(f"base must be >= 2, got {base}")
        if exponent < 0:
            numerator *= base ** (-exponent)
            exponent = 0
        while exponent and numerator % base == 0:
            numerator //= base
            exponent -= 1
        if numerator == 0:
            exponent = 0
        self.numerator = numerator
        self.exponent = exponent
        self.base = base

    @classmethod
    def from_fraction(cls, q, base: int) -> "LocalizedInt":
        q = Fraction(q)
        den = q.denominator
        rest = den
        while (g := gcd(rest, base)) > 1:
            rest //= g
        if rest != 1:
            raise ValueError(f"{q} is not in Z[1/{base}]")
        e = 0
        while base ** e % den:
            e += 1
        return cls(q.numerator * (base ** e // den), e, base)

    def _check(self, other: "LocalizedInt") -> None:
        if self.base != other.base:
            raise BaseMismatch(f"base {self.base} vs {other.base}")

    def _coerce(self, other):
        if isinstance(other, LocalizedInt):
            self._check(other)
            return other
        if isinstance(other, int):
            return LocalizedInt(other, 0, self.base)
        return NotImplemented

    def canon(self) -> "LocalizedInt":
        return LocalizedInt(self.numerator, self.exponent, self.base)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        e = max(self.exponent, other.exponent)
        k = self.base
        num = self.numerator * k ** (e - self.exponent) + other.numerator * k ** (e - other.exponent)
        return LocalizedInt(num, e, k)

    __radd__ = __add__

    def __neg__(self):
        return LocalizedInt(-self.numerator, self.exponent, self.base)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LocalizedInt(self.numerator * other.numerator, self.exponent + other.exponent, self.base)

    __rmul__ = __mul__

    def shift(self, j: int) -> "LocalizedInt":
        """Multiply by base**j (j may be negative)."""
        if j >= 0:
            return LocalizedInt(self.numerator * self.base ** j, self.exponent, self.base)
        return LocalizedInt(self.numerator, self.exponent - j, self.base)

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.base ** self.exponent)

    def floor(self) -> int:
        return self.numerator // self.base ** self.exponent

    def frac(self) -> "LocalizedInt":
        """Fractional part in [0, 1)."""
        return LocalizedInt(self.numerator % self.base ** self.exponent, self.exponent, self.base)

    def is_integer(self) -> bool:
        return self.exponent == 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.exponent == 0 and self.numerator == other
        if not isinstance(other, LocalizedInt):
            return NotImplemented
        return (self.numerator, self.exponent, self.base) == (other.numerator, other.exponent, other.base)

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.to_fraction() < other.to_fraction()

    def __hash__(self):
        return hash((self.numerator, self.exponent, self.base))

    def __repr__(self):
        if self.exponent == 0:
            return f"{self.numerator}"
        return f"{self.numerator}/{self.base}^{self.exponent}"

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{self.base ** self.exponent}"


def loc_add(a: LocalizedInt, b: LocalizedInt) -> LocalizedInt:
    if a.base != b.base:
        raise BaseMismatch(f"base {a.base} vs {b.base}")
    return a + b


class ModScalar:
    """Residue class mod N."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.residue = residue % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, ModScalar):
            if other.modulus != self.modulus:
                raise BaseMismatch(f"modulus {self.modulus} vs {other.modulus}")
            return other.residue
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return ModScalar(self.residue + r, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return ModScalar(self.residue - r, self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ModScalar(-self.residue, self.modulus)

    def __mul__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return ModScalar(self.residue * r, self.modulus)

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        return gcd(self.residue, self.modulus) == 1

    def inverse(self) -> "ModScalar":
        return mod_inverse(self)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = ModScalar(other, self.modulus)
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.residue == other % self.modulus
        if not isinstance(other, ModScalar):
            return NotImplemented
        return self.residue == other.residue and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"{self.residue} (mod {self.modulus})"


def mod_inverse(s: ModScalar) -> ModScalar:
    if gcd(s.residue, s.modulus) != 1:
        raise NotInvertible(f"{s.residue} is not invertible mod {s.modulus}")
    return ModScalar(pow(s.residue, -1, s.modulus), s.modulus)


class Rationals:
    """The field Q, with Fraction elements."""

    name = "Q"
    characteristic = 0

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def is_unit(self, x) -> bool:
        return Fraction(x) != 0

    def inverse(self, x):
        x = Fraction(x)
        if x == 0:
            raise NotInvertible("0 has no inverse in Q")
        return 1 / x

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class IntegersMod:
    """The ring Z/N, with ModScalar elements."""

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.modulus = modulus
        self.name = f"Z/{modulus}"
        self.characteristic = modulus

    def __call__(self, x) -> ModScalar:
        if isinstance(x, ModScalar):
            if x.modulus != self.modulus:
                raise BaseMismatch(f"modulus {x.modulus} vs {self.modulus}")
            return x
        if isinstance(x, Fraction):
            return ModScalar(x.numerator, self.modulus) / x.denominator
        return ModScalar(int(x), self.modulus)

    def zero(self):
        return ModScalar(0, self.modulus)

    def one(self):
        return ModScalar(1, self.modulus)

    def is_unit(self, x) -> bool:
        return self(x).is_unit()

    def inverse(self, x):
        return mod_inverse(self(x))

    def __eq__(self, other):
        return isinstance(other, IntegersMod) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("Z/", self.modulus))

    def __repr__(self):
        return self.name


def parse_ring(spec: str, m: int | None = None):
    """'Q', 'Zm' (uses m), or 'Z/N' / 'ZN' for an explicit modulus."""
    s = spec.strip()
    if s.upper() == "Q":
        return Rationals()
    if s == "Zm":
        if m is None:
            raise ValueError("ring 'Zm' needs m")
        return IntegersMod(m)
    if s.startswith("Z/"):
        return IntegersMod(int(s[2:]))
    if s.startswith("Z") and s[1:].isdigit():
        return IntegersMod(int(s[1:]))
    raise ValueError(f"unknown ring {spec!r}")
