"""The finite module AX (flattened coordinates), its module maps, and the wreath
product A wr_X B as an explicit finite group."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..abelian import AbelianSpec
from .groups import FiniteAction, FiniteGroup
from .linalg import kernel_of


class InfiniteCoefficients(ValueError):
    pass


class BoundExceeded(RuntimeError):
    pass


class FiniteModule:
    """AX for a finite A (in primary form) and a finite action; coordinate (x, i) sits
    at flat index x * r + i where r is the number of cyclic factors of A."""

    def __init__(self, action: FiniteAction, A: AbelianSpec):
        if not A.is_finite():
            raise InfiniteCoefficients(f"{A} is infinite")
        self.action = action
        self.A = A.primary_form()
        self.r = len(self.A.invariants)
        self.n = action.n
        self.dim = self.n * self.r
        self.moduli = np.tile(np.array(self.A.invariants, dtype=np.int64), self.n)
        self.size = int(np.prod(self.moduli, dtype=object)) if self.dim else 1
        # act_src[b, j] = coordinate of b^-1 . (flat j), so (b o v) = v[act_src[b]]
        g = action.group
        self.act_src = np.empty((g.order, self.dim), dtype=np.int64)
        idx = np.arange(self.dim)
        x, i = idx // max(self.r, 1), idx % max(self.r, 1)
        for b in range(g.order):
            binv = g.inv[b]
            self.act_src[b] = action.images[binv, x] * self.r + i if self.r else idx
        self._codes = None

    def act(self, b: int, v: np.ndarray) -> np.ndarray:
        return v[self.act_src[b]]

    def perm_matrix(self, b: int) -> np.ndarray:
        P = np.zeros((self.dim, self.dim), dtype=np.int64)
        P[np.arange(self.dim), self.act_src[b]] = 1
        return P

    def reduce(self, v) -> np.ndarray:
        return np.asarray(v, dtype=np.int64) % self.moduli

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def basis_vector(self, x: int, i: int = 0) -> np.ndarray:
        v = self.zero()
        v[x * self.r + i] = 1
        return v

    # mixed-radix codes, coordinate 0 least significant
    def encode(self, v) -> int:
        code = 0
        for j in range(self.dim - 1, -1, -1):
            code = code * int(self.moduli[j]) + int(v[j]) % int(self.moduli[j])
        return code

    def decode(self, code: int) -> np.ndarray:
        v = self.zero()
        for j in range(self.dim):
            code, v[j] = divmod(code, int(self.moduli[j]))
        return v

    def all_vectors(self, bound: int = 1 << 16) -> np.ndarray:
        if self.size > bound:
            raise BoundExceeded(f"|AX| = {self.size} exceeds {bound}")
        if self._codes is None:
            out = np.zeros((self.size, self.dim), dtype=np.int64)
            c = np.arange(self.size, dtype=np.int64)
            for j in range(self.dim):
                c, out[:, j] = np.divmod(c, self.moduli[j])
            self._codes = out
        return self._codes

    def invariant_generators(self) -> List[np.ndarray]:
        """Generators of the fixed submodule M^B."""
        g = self.action.group
        gens = g.generators
        rows = [self.perm_matrix(b) - np.eye(self.dim, dtype=np.int64) for b in gens]
        if not rows:
            return [np.eye(self.dim, dtype=np.int64)[j] for j in range(self.dim)]
        F = np.concatenate(rows, axis=0)
        return kernel_of(F, self.moduli, np.tile(self.moduli, len(gens)))[1]

    def invariant_order(self) -> int:
        gens = self.action.group.generators
        if not gens or self.dim == 0:
            return self.size
        F = np.concatenate([self.perm_matrix(b) - np.eye(self.dim, dtype=np.int64) for b in gens])
        return kernel_of(F, self.moduli, np.tile(self.moduli, len(gens)))[0]


class ModuleMap:
    """An additive endomorphism of AX given by an integer matrix on flat coordinates."""

    __slots__ = ("module", "F")

    def __init__(self, module: FiniteModule, F):
        self.module = module
        self.F = np.asarray(F, dtype=np.int64) % module.moduli[:, None]

    @classmethod
    def identity(cls, module: FiniteModule) -> "ModuleMap":
        return cls(module, np.eye(module.dim, dtype=np.int64))

    @classmethod
    def from_point_map(cls, module: FiniteModule, f: Sequence[int]) -> "ModuleMap":
        """a x -> a f(x)."""
        r = module.r
        F = np.zeros((module.dim, module.dim), dtype=np.int64)
        for x in range(module.n):
            for i in range(r):
                F[f[x] * r + i, x * r + i] = 1
        return cls(module, F)

    def __call__(self, v) -> np.ndarray:
        return (self.F @ np.asarray(v, dtype=np.int64)) % self.module.moduli

    def __mul__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.module, self.F @ other.F)

    def __eq__(self, other):
        return isinstance(other, ModuleMap) and np.array_equal(self.F, other.F)

    def __hash__(self):
        return hash(self.F.tobytes())

    def is_well_defined(self) -> bool:
        mod = self.module.moduli
        return bool(np.all((self.F * mod[None, :]) % mod[:, None] == 0))

    def is_equivariant(self) -> bool:
        m = self.module
        for b in m.action.group.generators:
            P = m.perm_matrix(b)
            if not np.array_equal((self.F @ P) % m.moduli[:, None], (P @ self.F) % m.moduli[:, None]):
                return False
        return True

    def kernel_order(self) -> int:
        m = self.module
        if m.dim == 0:
            return 1
        return kernel_of(self.F, m.moduli, m.moduli)[0]

    def is_bijective(self) -> bool:
        return self.kernel_order() == 1

    def key(self) -> bytes:
        return self.F.tobytes()

    def __repr__(self):
        return f"ModuleMap({self.F.tolist()})"


class FiniteWreath:
    """A wr_X B as an explicit group: element code(m) * |B| + b stands for m b."""

    def __init__(self, action: FiniteAction, A: AbelianSpec, max_order: int = 5000):
        self.action = action
        self.B = action.group
        self.module = FiniteModule(action, A)
        self.A = self.module.A
        self.order = self.module.size * self.B.order
        if self.order > max_order:
            raise BoundExceeded(f"|G| = {self.order} exceeds {max_order}")
        self._group: Optional[FiniteGroup] = None

    def index(self, v, b: int) -> int:
        return self.module.encode(v) * self.B.order + int(b)

    def split(self, g: int) -> Tuple[np.ndarray, int]:
        c, b = divmod(int(g), self.B.order)
        return self.module.decode(c), b

    def embed_b(self, b: int) -> int:
        return int(b)

    def embed_m(self, v) -> int:
        return self.index(v, 0)

    @property
    def group(self) -> FiniteGroup:
        if self._group is None:
            mod = self.module
            nB = self.B.order
            vecs = mod.all_vectors(bound=self.order)
            weights = np.cumprod(np.concatenate([[1], mod.moduli[:-1]])) if mod.dim else np.zeros(0, np.int64)
            # actM[b, c] = code of b o m_c ;  addM[c1, c2] = code of m_c1 + m_c2
            actM = np.empty((nB, mod.size), dtype=np.int64)
            for b in range(nB):
                actM[b] = vecs[:, mod.act_src[b]] @ weights if mod.dim else 0
            addM = ((vecs[:, None, :] + vecs[None, :, :]) % mod.moduli) @ weights if mod.dim \
                else np.zeros((1, 1), np.int64)
            c1 = np.arange(mod.size)[:, None, None, None]
            b1 = np.arange(nB)[None, :, None, None]
            c2 = np.arange(mod.size)[None, None, :, None]
            b2 = np.arange(nB)[None, None, None, :]
            T = addM[c1, actM[b1, c2]] * nB + self.B.table[b1, b2]
            T = T.reshape(self.order, self.order)
            self._group = FiniteGroup(T, name=f"({self.A}) wr {self.action.name}")
        return self._group

    def mul(self, g: int, h: int) -> int:
        v1, b1 = self.split(g)
        v2, b2 = self.split(h)
        return self.index(self.module.reduce(v1 + self.module.act(b1, v2)), self.B.mul(b1, b2))

    def center_order(self) -> int:
        return len(self.group.center())
