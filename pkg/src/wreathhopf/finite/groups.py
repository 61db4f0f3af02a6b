"""Finite groups (elements 0..N-1, identity 0, cached multiplication table) and
their left actions on X = {0..n-1}."""

from __future__ import annotations

import re
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np


class GroupFormatError(ValueError):
    pass


def _compose(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
    """(p q)(x) = p(q(x))."""
    return tuple(p[i] for i in q)


class FiniteGroup:
    """A finite group given by its multiplication table.

    When built from permutations, `perms[i]` is a faithful permutation for element i.
    """

    def __init__(self, table, name: str = "", perms: Optional[List[Tuple[int, ...]]] = None,
                 gens: Optional[Sequence[int]] = None):
        T = np.asarray(table, dtype=np.int64)
        N = T.shape[0]
        if T.shape != (N, N):
            raise GroupFormatError("multiplication table must be square")
        if not (np.array_equal(T[0], np.arange(N)) and np.array_equal(T[:, 0], np.arange(N))):
            raise GroupFormatError("element 0 must be the identity")
        self.table = T
        self.order = N
        self.name = name or f"group of order {N}"
        self.perms = perms
        inv = np.argmax(T == 0, axis=1)
        if not np.all(T[np.arange(N), inv] == 0):
            raise GroupFormatError("table has an element without inverse")
        self.inv = inv.astype(np.int64)
        self._gens = list(gens) if gens is not None else None
        self._orders = None

    # -- constructors

    @classmethod
    def from_permutations(cls, gens: Sequence[Sequence[int]], name: str = "") -> "FiniteGroup":
        gens = [tuple(int(x) for x in g) for g in gens]
        if not gens:
            raise GroupFormatError("no generators")
        n = len(gens[0])
        if any(len(g) != n or sorted(g) != list(range(n)) for g in gens):
            raise GroupFormatError("generators are not permutations of one set")
        ident = tuple(range(n))
        elems = [ident]
        index = {ident: 0}
        head = 0
        while head < len(elems):
            x = elems[head]
            head += 1
            for g in gens:
                y = _compose(x, g)
                if y not in index:
                    index[y] = len(elems)
                    elems.append(y)
        N = len(elems)
        T = np.empty((N, N), dtype=np.int64)
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                T[i, j] = index[_compose(a, b)]
        gen_idx = [index[g] for g in gens]
        return cls(T, name=name, perms=elems, gens=gen_idx)

    # -- basic structure

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def elements(self) -> range:
        return range(self.order)

    @property
    def identity(self) -> int:
        return 0

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            orders = np.zeros(self.order, dtype=np.int64)
            for g in range(self.order):
                x, k = g, 1
                while x != 0:
                    x = self.table[x, g]
                    k += 1
                orders[g] = k
            self._orders = orders
        return self._orders

    def generated(self, gens: Iterable[int]) -> List[int]:
        gens = list(gens)
        seen = {0}
        queue = [0]
        for x in queue:
            for g in gens:
                y = int(self.table[x, g])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    @property
    def generators(self) -> List[int]:
        """A small generating set: greedy, preferring elements that enlarge the span most."""
        if self._gens is None:
            gens: List[int] = []
            span = {0}
            while len(span) < self.order:
                best, best_span = None, None
                for g in range(self.order):
                    if g in span:
                        continue
                    s = self.generated(gens + [g])
                    if best_span is None or len(s) > len(best_span):
                        best, best_span = g, s
                        if len(s) == self.order:
                            break
                gens.append(best)
                span = set(best_span)
            self._gens = gens
        return list(self._gens)

    def minimal_generators(self) -> List[int]:
        """A generating set of least size (exhaustive over small sizes)."""
        if self.order == 1:
            return []
        greedy = self.generators
        for size in range(1, len(greedy)):
            for combo in combinations(range(1, self.order), size):
                if len(self.generated(combo)) == self.order:
                    return list(combo)
        return greedy

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def commute(self, a: int, b: int) -> bool:
        return self.table[a, b] == self.table[b, a]

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1"""
        return int(self.table[self.table[g, x], self.inv[g]])

    def conjugacy_class(self, x: int) -> List[int]:
        return sorted({self.conjugate(g, x) for g in range(self.order)})

    def center(self) -> List[int]:
        return [z for z in range(self.order) if np.array_equal(self.table[z], self.table[:, z])]

    def subgroups(self) -> List[Tuple[int, ...]]:
        """All subgroups, as iterated joins of cyclic subgroups (small groups only)."""
        found = set()
        cyc = {tuple(self.generated([g])) for g in range(self.order)}
        frontier = set(cyc)
        found |= cyc
        while frontier:
            new = set()
            for H in frontier:
                for C in cyc:
                    J = tuple(self.generated(list(H) + list(C)))
                    if J not in found:
                        new.add(J)
            found |= new
            frontier = new
        return sorted(found, key=lambda H: (len(H), H))

    def left_cosets(self, H: Sequence[int]) -> List[Tuple[int, ...]]:
        Hs = list(H)
        seen = set()
        out = []
        for g in range(self.order):
            if g in seen:
                continue
            c = tuple(sorted(int(self.table[g, h]) for h in Hs))
            seen.update(c)
            out.append(c)
        return out

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"


class FiniteAction:
    """A left action of a finite group on X = {0..n-1}; images[b, x] = b * x."""

    finite = True

    def __init__(self, group: FiniteGroup, images, name: str = ""):
        imgs = np.asarray(images, dtype=np.int64)
        if imgs.ndim != 2 or imgs.shape[0] != group.order:
            raise GroupFormatError("need one image row per group element")
        n = imgs.shape[1]
        if n and not np.all(np.sort(imgs, axis=1) == np.arange(n)):
            raise GroupFormatError("action images are not permutations")
        # images[T[a, b]] == images[a][images[b]]
        lhs = imgs[group.table]
        rhs = imgs[np.arange(group.order)[:, None, None], imgs[None, :, :]]
        if not np.array_equal(lhs, rhs):
            raise GroupFormatError("images do not define a left action")
        self.group = group
        self.images = imgs
        self.n = n
        self.name = name or f"{group.name} on {n} points"

    # backend interface for the generic wreath product
    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return int(self.group.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.group.inv[a])

    def act(self, b: int, x: int) -> int:
        return int(self.images[b, x])

    def point_key(self, x: int):
        return x

    def points(self) -> range:
        return range(self.n)

    def perm_matrix(self, b: int) -> np.ndarray:
        P = np.zeros((self.n, self.n), dtype=np.int64)
        P[self.images[b], np.arange(self.n)] = 1
        return P

    def fixed_counts(self) -> np.ndarray:
        return (self.images == np.arange(self.n)).sum(axis=1)

    def __repr__(self):
        return f"FiniteAction({self.name!r})"


# -- standard constructions ----------------------------------------------------------


def cyclic_group(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup([[0]], name="C1", perms=[(0,)], gens=[])
    return FiniteGroup.from_permutations([tuple((i + 1) % n for i in range(n))], name=f"C{n}")


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return cyclic_group(1)
    gens = [tuple([1, 0] + list(range(2, n))), tuple((i + 1) % n for i in range(n))]
    if n == 2:
        gens = gens[:1]
    return FiniteGroup.from_permutations(gens, name=f"S{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon (order 2n), acting on its n vertices."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return FiniteGroup.from_permutations([rot, ref], name=f"D{n}")


def natural_action(group: FiniteGroup, name: str = "") -> FiniteAction:
    if group.perms is None:
        raise ValueError("group has no permutation representation")
    return FiniteAction(group, np.array(group.perms, dtype=np.int64), name=name or f"{group.name} natural")


def regular_action(group: FiniteGroup) -> FiniteAction:
    return FiniteAction(group, group.table.copy(), name=f"{group.name} regular")


def trivial_action(group: FiniteGroup, n: int = 1) -> FiniteAction:
    imgs = np.tile(np.arange(n, dtype=np.int64), (group.order, 1))
    return FiniteAction(group, imgs, name=f"{group.name} trivial on {n}")


def coset_action(group: FiniteGroup, H: Sequence[int], name: str = "") -> FiniteAction:
    """Left multiplication on B/H; the coset containing the identity is point 0."""
    cosets = group.left_cosets(H)
    where = {}
    for i, c in enumerate(cosets):
        for g in c:
            where[g] = i
    imgs = np.empty((group.order, len(cosets)), dtype=np.int64)
    for b in range(group.order):
        for i, c in enumerate(cosets):
            imgs[b, i] = where[int(group.table[b, c[0]])]
    return FiniteAction(group, imgs, name=name or f"{group.name}/H(|H|={len(H)})")


def disjoint_union(actions: Sequence[FiniteAction], name: str = "") -> FiniteAction:
    group = actions[0].group
    if any(a.group is not group for a in actions):
        raise ValueError("actions of different groups")
    cols = []
    off = 0
    for a in actions:
        cols.append(a.images + off)
        off += a.n
    return FiniteAction(group, np.concatenate(cols, axis=1),
                        name=name or " + ".join(a.name for a in actions))


# -- text format ---------------------------------------------------------------------

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int, base: int = 1) -> Tuple[int, ...]:
    perm = list(range(n))
    text = text.strip()
    if not text:
        raise GroupFormatError("empty permutation")
    rest = _CYCLE.sub("", text).strip()
    if rest:
        raise GroupFormatError(f"cannot parse cycles in {text!r}")
    seen = set()
    for body in _CYCLE.findall(text):
        pts = [int(tok) - base for tok in body.replace(",", " ").split()]
        for p in pts:
            if not 0 <= p < n:
                raise GroupFormatError(f"point {p + base} out of range 1..{n}")
            if p in seen:
                raise GroupFormatError(f"point {p + base} repeated in {text!r}")
            seen.add(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


def format_cycles(perm: Sequence[int], base: int = 1) -> str:
    seen = set()
    out = []
    for s in range(len(perm)):
        if s in seen or perm[s] == s:
            continue
        cyc = [s]
        seen.add(s)
        x = perm[s]
        while x != s:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        out.append("(" + " ".join(str(c + base) for c in cyc) + ")")
    return "".join(out) or "()"


def parse_action(text: str, name: str = "") -> FiniteAction:
    """Parse the group/action text format.

    Line 1: ``n <points>``.  Then either one generator per line in cycle notation
    over points 1..n (the group is the permutation group they generate), or a
    ``table <N>`` block of N rows (element 0 the identity) followed by lines
    ``<element> <cycles>`` giving the action of a generating set of elements.
    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GroupFormatError("empty group file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise GroupFormatError("first line must be 'n <points>'")
    n = int(head[1])
    if n < 1:
        raise GroupFormatError("need at least one point")
    body = lines[1:]
    if body and body[0].split()[0] == "table":
        return _parse_table_block(body, n, name)
    if not body:
        raise GroupFormatError("no generators")
    gens = [parse_cycles(ln, n) for ln in body]
    group = FiniteGroup.from_permutations(gens, name=name)
    return natural_action(group, name=name)


def _parse_table_block(body: List[str], n: int, name: str) -> FiniteAction:
    parts = body[0].split()
    if len(parts) != 2 or not parts[1].isdigit():
        raise GroupFormatError("expected 'table <order>'")
    N = int(parts[1])
    if len(body) < 1 + N:
        raise GroupFormatError("table block is short")
    try:
        rows = [[int(tok) for tok in ln.split()] for ln in body[1:1 + N]]
    except ValueError as exc:
        raise GroupFormatError(f"bad table row: {exc}") from None
    if any(len(r) != N for r in rows):
        raise GroupFormatError("table rows must have N entries")
    group = FiniteGroup(rows, name=name)
    T = group.table
    if not (np.all(np.sort(T, axis=1) == np.arange(N)) and np.all(np.sort(T, axis=0) == np.arange(N)[:, None])):
        raise GroupFormatError("table is not a Latin square")
    if not np.array_equal(T[T], T[:, T]):
        raise GroupFormatError("table is not associative")
    given: Dict[int, Tuple[int, ...]] = {}
    for ln in body[1 + N:]:
        tok, _, cyc = ln.partition(" ")
        if not tok.isdigit() or int(tok) >= N:
            raise GroupFormatError(f"bad action line {ln!r}")
        given[int(tok)] = parse_cycles(cyc, n)
    images: List[Optional[Tuple[int, ...]]] = [None] * N
    images[0] = tuple(range(n))
    queue = [0]
    for x in queue:
        for g, pg in given.items():
            y = int(T[x, g])
            py = _compose(images[x], pg)
            if images[y] is None:
                images[y] = py
                queue.append(y)
            elif images[y] != py:
                raise GroupFormatError("action images are inconsistent with the table")
    if any(im is None for im in images):
        raise GroupFormatError("listed elements do not generate the group")
    group._gens = sorted(given) or []
    return FiniteAction(group, images, name=name)


def format_action(action: FiniteAction) -> str:
    g = action.group
    if g.perms is not None and np.array_equal(np.array(g.perms), action.images):
        lines = [f"n {action.n}"]
        lines += [format_cycles(g.perms[i]) for i in g.generators]
        return "\n".join(lines) + "\n"
    lines = [f"n {action.n}", f"table {g.order}"]
    lines += [" ".join(str(int(v)) for v in row) for row in g.table]
    gens = g.generators or [0]
    lines += [f"{i} {format_cycles(action.images[i])}" for i in gens]
    return "\n".join(lines) + "\n"
