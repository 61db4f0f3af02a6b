"""The module M = AX of finitely supported functions X -> A and the wreath
product G = M x| B, over either action backend (BS cosets or a finite action).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, Tuple

from .abelian import AbelianElement, AbelianSpec


class ContextMismatch(ValueError):
    pass


class ModuleVector:
    """A finitely supported A-valued function on X, stored sorted by point."""

    __slots__ = ("spec", "_items", "_hash")

    def __init__(self, spec: AbelianSpec, values: Dict[Any, Any] | Iterable = ()):
        self.spec = spec
        acc: Dict[Any, AbelianElement] = {}
        pairs = values.items() if isinstance(values, dict) else values
        for x, a in pairs:
            if not isinstance(a, AbelianElement):
                a = spec.element(a if isinstance(a, tuple) else (a,))
            elif a.spec != spec:
                raise ContextMismatch(f"{a.spec} vs {spec}")
            acc[x] = acc[x] + a if x in acc else a
        self._items: Tuple[Tuple[Any, AbelianElement], ...] = tuple(
            sorted(((x, a) for x, a in acc.items() if not a.is_zero()), key=lambda kv: kv[0])
        )
        self._hash = None

    @classmethod
    def basis(cls, spec: AbelianSpec, x, a=None) -> "ModuleVector":
        if a is None:
            a = (1,) * len(spec.invariants)
        return cls(spec, {x: a})

    def items(self):
        return self._items

    @property
    def support(self):
        return tuple(x for x, _ in self._items)

    def get(self, x) -> AbelianElement:
        for y, a in self._items:
            if y == x:
                return a
        return self.spec.zero()

    def is_zero(self) -> bool:
        return not self._items

    def _check(self, other: "ModuleVector"):
        if self.spec != other.spec:
            raise ContextMismatch(f"{self.spec} vs {other.spec}")

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        return ModuleVector(self.spec, list(self._items) + list(other._items))

    def __neg__(self):
        return ModuleVector(self.spec, [(x, -a) for x, a in self._items])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n: int) -> "ModuleVector":
        return ModuleVector(self.spec, [(x, a.scale(n)) for x, a in self._items])

    def relabel(self, f: Callable) -> "ModuleVector":
        """Push forward along f: X -> X (colliding values are summed)."""
        return ModuleVector(self.spec, [(f(x), a) for x, a in self._items])

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.spec == other.spec and self._items == other._items

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec, self._items))
        return self._hash

    def __len__(self):
        return len(self._items)

    def __repr__(self):
        if not self._items:
            return "0"
        return " + ".join(f"{a}*{x!r}" for x, a in self._items)


def mv_act(backend, b, m: ModuleVector) -> ModuleVector:
    """b o m = b m b^-1: the value at x moves to b*x."""
    return m.relabel(lambda x: backend.act(b, x))


class WreathGroup:
    """A wr_X B for an abelian spec A and an action backend."""

    def __init__(self, backend, spec: AbelianSpec):
        self.backend = backend
        self.spec = spec

    def element(self, mv: ModuleVector | Dict | None = None, b=None) -> "WreathElement":
        if mv is None:
            mv = ModuleVector(self.spec)
        elif not isinstance(mv, ModuleVector):
            mv = ModuleVector(self.spec, mv)
        if b is None:
            b = self.backend.identity
        return WreathElement(mv, b, self)

    @property
    def identity(self) -> "WreathElement":
        return self.element()

    def __eq__(self, other):
        return (isinstance(other, WreathGroup) and self.backend == other.backend
                and self.spec == other.spec)

    def __hash__(self):
        return hash((self.backend, self.spec))

    def __repr__(self):
        return f"WreathGroup({self.spec}, {self.backend!r})"


@dataclass(frozen=True)
class WreathElement:
    mv: ModuleVector
    b: Any
    group: WreathGroup

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        return wr_mul(self, other)

    def inverse(self) -> "WreathElement":
        return wr_inv(self)

    def is_identity(self) -> bool:
        return self.mv.is_zero() and self.b == self.group.backend.identity

    def __repr__(self):
        return f"[{self.mv!r} ; {self.b!r}]"


def wr_mul(g: WreathElement, h: WreathElement) -> WreathElement:
    if g.group != h.group:
        raise ContextMismatch(f"{g.group!r} vs {h.group!r}")
    be = g.group.backend
    return WreathElement(g.mv + mv_act(be, g.b, h.mv), be.mul(g.b, h.b), g.group)


def wr_inv(g: WreathElement) -> WreathElement:
    be = g.group.backend
    binv = be.inv(g.b)
    return WreathElement(-mv_act(be, binv, g.mv), binv, g.group)


def pi(g: WreathElement):
    return g.b
