"""Permutations and permutation groups given by generators.

A permutation is stored as its image tuple: position ``v`` holds the image of
``v``. ``compose(a, b)`` maps ``v`` to ``a(b(v))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class Permutation(tuple):
    """Immutable bijection on ``0..n-1``."""

    def __new__(cls, images: Iterable[int]):
        self = super().__new__(cls, images)
        if sorted(self) != list(range(len(self))):
            raise ValueError(f"not a permutation: {tuple(self)}")
        return self

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(n))
        for cyc in cycles:
            for i, v in enumerate(cyc):
                images[v] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, v: int) -> int:
        return self[v]

    def __mul__(self, other):
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for v, img in enumerate(self):
            inv[img] = v
        return _trusted(inv)

    def is_identity(self) -> bool:
        return all(v == img for v, img in enumerate(self))

    def support(self) -> list[int]:
        return [v for v, img in enumerate(self) if v != img]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for v in range(len(self)):
            if v in seen or self[v] == v:
                continue
            cyc = [v]
            seen.add(v)
            w = self[v]
            while w != v:
                cyc.append(w)
                seen.add(w)
                w = self[w]
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"

    def __repr__(self):
        return f"Permutation({list(self)})"


def _trusted(images) -> Permutation:
    return tuple.__new__(Permutation, images)


def compose(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """Return ``a o b`` (apply ``b`` first)."""
    if len(a) != len(b):
        raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")
    return _trusted(a[v] for v in b)


@dataclass(frozen=True)
class GeneratorSet:
    degree: int
    gens: tuple[Permutation, ...] = ()

    def __post_init__(self):
        cleaned = []
        for g in self.gens:
            p = g if isinstance(g, Permutation) else Permutation(g)
            if len(p) != self.degree:
                raise ValueError(f"generator of degree {len(p)} in a set of degree {self.degree}")
            if not p.is_identity():
                cleaned.append(p)
        object.__setattr__(self, "gens", tuple(cleaned))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    @property
    def is_trivial(self) -> bool:
        return not self.gens


@dataclass(frozen=True)
class OrbitPartition:
    cells: tuple[tuple[int, ...], ...]
    _cell_of: tuple[int, ...] = field(repr=False, compare=False, default=())

    def __post_init__(self):
        n = sum(len(c) for c in self.cells)
        where = [-1] * n
        for i, cell in enumerate(self.cells):
            for v in cell:
                where[v] = i
        object.__setattr__(self, "_cell_of", tuple(where))

    def cell(self, v: int) -> tuple[int, ...]:
        return self.cells[self._cell_of[v]]

    def rep(self, v: int) -> int:
        return self.cells[self._cell_of[v]][0]

    def same(self, u: int, v: int) -> bool:
        return self._cell_of[u] == self._cell_of[v]

    def reps(self) -> list[int]:
        return [c[0] for c in self.cells]

    def singletons(self) -> list[int]:
        return [c[0] for c in self.cells if len(c) == 1]


def orbit_partition_from(n: int, gens: Iterable[Sequence[int]]) -> OrbitPartition:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(find(v), []).append(v)
    return OrbitPartition(tuple(tuple(c) for c in sorted(cells.values())))


def orbits(gs: GeneratorSet) -> OrbitPartition:
    return orbit_partition_from(gs.degree, gs.gens)


def orbit(point: int, gens: Sequence[Sequence[int]]) -> list[int]:
    seen = {point}
    todo = [point]
    while todo:
        x = todo.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return sorted(seen)


class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims.

    Base points are chosen as the least point moved by the element that
    forces a new level, so the base is ascending for typical inputs.
    """

    def __init__(self, gs: GeneratorSet):
        self.degree = gs.degree
        self.base: list[int] = []
        self.levels: list[list[Permutation]] = []
        self.transversals: list[dict[int, Permutation]] = []
        for g in gs.gens:
            if all(g[b] == b for b in self.base):
                self._add_base_point(g.support()[0])
        self._build([g for g in gs.gens])

    def _add_base_point(self, b: int) -> None:
        self.base.append(b)
        self.levels.append([])
        self.transversals.append({b: Permutation.identity(self.degree)})

    def _transversal(self, i: int) -> None:
        b = self.base[i]
        gens = self.levels[i]
        trans = {b: Permutation.identity(self.degree)}
        todo = [b]
        while todo:
            x = todo.pop()
            ux = trans[x]
            for g in gens:
                y = g[x]
                if y not in trans:
                    trans[y] = compose(g, ux)
                    todo.append(y)
        self.transversals[i] = trans

    def sift(self, h: Permutation, start: int = 0) -> tuple[Permutation, int]:
        for i in range(start, len(self.base)):
            beta = h[self.base[i]]
            u = self.transversals[i].get(beta)
            if u is None:
                return h, i
            h = compose(u.inverse(), h)
        return h, len(self.base)

    def _build(self, gens: list[Permutation]) -> None:
        for i in range(len(self.base)):
            self.levels[i] = [g for g in gens if all(g[b] == b for b in self.base[:i])]
            self._transversal(i)
        i = len(self.base) - 1
        while i >= 0:
            restarted = False
            trans = self.transversals[i]
            for beta in sorted(trans):
                u_beta = trans[beta]
                for s in self.levels[i]:
                    u_img = self.transversals[i][s[beta]]
                    h = compose(u_img.inverse(), compose(s, u_beta))
                    if h.is_identity():
                        continue
                    r, j = self.sift(h, i + 1)
                    if j == len(self.base) and r.is_identity():
                        continue
                    if j == len(self.base):
                        self._add_base_point(r.support()[0])
                    for level in range(i + 1, j + 1):
                        self.levels[level].append(r)
                        self._transversal(level)
                    i = j
                    restarted = True
                    break
                if restarted:
                    break
            if not restarted:
                i -= 1

    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def contains(self, p: Sequence[int]) -> bool:
        r, j = self.sift(Permutation(p))
        return j == len(self.base) and r.is_identity()


def group_order(gs: GeneratorSet) -> int:
    if gs.is_trivial:
        return 1
    return StabilizerChain(gs).order()


def closure(gs: GeneratorSet, limit: int = 100_000) -> set[Permutation]:
    """All group elements by breadth-first products; refuses groups above ``limit``."""
    ident = Permutation.identity(gs.degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gs.gens:
                q = compose(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > limit:
                        raise ValueError(f"group larger than {limit}")
        frontier = nxt
    return seen
