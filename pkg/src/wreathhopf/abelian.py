"""Finitely generated abelian coefficient groups given by cyclic invariants.

An invariant 0 is a copy of Z; d >= 2 is Z/d; 1 (the trivial group) is dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, inf
from typing import Dict, List, Tuple

from .scalars import BaseMismatch


def factorize(n: int) -> Dict[int, int]:
    out: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class AbelianSpec:
    invariants: Tuple[int, ...]

    def __post_init__(self):
        inv = tuple(int(d) for d in self.invariants)
        if any(d < 0 for d in inv):
            raise ValueError(f"negative invariant in {inv}")
        object.__setattr__(self, "invariants", tuple(d for d in inv if d != 1))

    @classmethod
    def parse(cls, text: str) -> "AbelianSpec":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(tok) for tok in text.split(",")))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariants if d == 0)

    def is_trivial(self) -> bool:
        return not self.invariants

    def is_finite(self) -> bool:
        return 0 not in self.invariants

    def order(self):
        if not self.is_finite():
            return inf
        out = 1
        for d in self.invariants:
            out *= d
        return out

    def n_p(self, p: int) -> int:
        """dim over F_p of A_p / p A_p for a prime p; rank of A/tor(A) for p = 0."""
        if p == 0:
            return self.rank
        return sum(1 for d in self.invariants if d != 0 and d % p == 0)

    def primes(self) -> List[int]:
        ps = set()
        for d in self.invariants:
            if d:
                ps.update(factorize(d))
        return sorted(ps)

    def primary_form(self) -> "AbelianSpec":
        """Same group with invariants split into prime powers (zeros first)."""
        parts = primary_decompose(self)
        out: List[int] = []
        for p in sorted(parts):
            out.extend(parts[p].invariants)
        return AbelianSpec(tuple(out))

    def zero(self) -> "AbelianElement":
        return AbelianElement(self, (0,) * len(self.invariants))

    def element(self, coords) -> "AbelianElement":
        return AbelianElement(self, tuple(coords))

    def __str__(self):
        if not self.invariants:
            return "0"
        return " + ".join("Z" if d == 0 else f"Z/{d}" for d in self.invariants)


@dataclass(frozen=True)
class AbelianElement:
    spec: AbelianSpec
    coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != len(self.spec.invariants):
            raise ValueError("coordinate count does not match the invariants")
        red = tuple(c % d if d else c for c, d in zip(self.coords, self.spec.invariants))
        object.__setattr__(self, "coords", red)

    def __add__(self, other: "AbelianElement") -> "AbelianElement":
        return a_add(self, other)

    def __neg__(self):
        return AbelianElement(self.spec, tuple(-c for c in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n: int) -> "AbelianElement":
        return AbelianElement(self.spec, tuple(n * c for c in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        return f"{list(self.coords)}"


def a_add(x: AbelianElement, y: AbelianElement) -> AbelianElement:
    if x.spec != y.spec:
        raise BaseMismatch(f"{x.spec} vs {y.spec}")
    return AbelianElement(x.spec, tuple(a + b for a, b in zip(x.coords, y.coords)))


def primary_decompose(A: AbelianSpec) -> Dict[int, AbelianSpec]:
    """Split A into its torsion-free part (key 0) and p-primary parts."""
    parts: Dict[int, List[int]] = {}
    for d in A.invariants:
        if d == 0:
            parts.setdefault(0, []).append(0)
            continue
        for p, e in factorize(d).items():
            parts.setdefault(p, []).append(p ** e)
    return {p: AbelianSpec(tuple(sorted(v))) for p, v in sorted(parts.items())}


def crt_recombine(parts: Dict[int, AbelianSpec]) -> List[int]:
    """Invariant factors d_1 | d_2 | ... (zeros last) of the direct sum of the parts."""
    zeros = list(parts.get(0, AbelianSpec(())).invariants)
    columns: List[List[int]] = []
    for p, spec in parts.items():
        if p == 0:
            continue
        columns.append(sorted(spec.invariants, reverse=True))
    width = max((len(c) for c in columns), default=0)
    factors = []
    for i in range(width):
        d = 1
        for c in columns:
            if i < len(c):
                d *= c[i]
        factors.append(d)
    return sorted(factors) + zeros


def invariant_factors(A: AbelianSpec) -> List[int]:
    return crt_recombine(primary_decompose(A))


def exponent(A: AbelianSpec):
    """Least n >= 1 with nA = 0, or math.inf."""
    if not A.is_finite():
        return inf
    out = 1
    for d in A.invariants:
        out = out * d // gcd(out, d)
    return out
