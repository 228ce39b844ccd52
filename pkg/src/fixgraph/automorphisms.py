"""Automorphism groups, pointwise stabilizers and canonical forms.

The search is the usual individualization-refinement scheme. An ordered
partition is refined to the coarsest equitable partition; the first
non-singleton cell of minimum size is the target cell, and its vertices are
individualized in ascending order. Generators are found along the first path
of the search tree, deepest level first, skipping any sibling already in the
orbit of the first-path vertex under the generators found so far.

Seeding the initial partition with the vertices of ``F`` as leading
singletons restricts the whole search to the pointwise stabilizer of ``F``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .graph import Graph, bits, mask_of
from .perm import GeneratorSet, OrbitPartition, Permutation, orbit_partition_from


def refine(rows, cells):
    """Coarsest equitable refinement of ``cells``.

    Each round splits every cell by the vector of neighbour counts into all
    current cells; the pieces keep the position of their parent cell and are
    ordered by that vector.
    """
    cells = [list(c) for c in cells]
    while True:
        masks = [mask_of(c) for c in cells]
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                r = rows[v]
                groups.setdefault(tuple((r & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            split = True
            for sig in sorted(groups):
                out.append(groups[sig])
        cells = out
        if not split:
            return cells


def node_invariant(rows, cells) -> tuple:
    """Cell sizes plus the quotient matrix of an equitable partition."""
    masks = [mask_of(c) for c in cells]
    quotient = tuple(tuple((rows[c[0]] & m).bit_count() for m in masks) for c in cells)
    return tuple(len(c) for c in cells), quotient


def target_cell(cells) -> int | None:
    best = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (best is None or len(c) < len(cells[best])):
            best = i
    return best


def individualize(cells, t: int, v: int):
    rest = [u for u in cells[t] if u != v]
    return cells[:t] + [[v], rest] + cells[t + 1:]


def leaf_certificate(rows, cells) -> tuple[int, ...]:
    """Adjacency rows of the graph relabeled so that cell ``i`` becomes vertex ``i``."""
    lab = [c[0] for c in cells]
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    return tuple(mask_of(pos[u] for u in bits(rows[v])) for v in lab)


@dataclass(frozen=True)
class AutResult:
    generators: GeneratorSet
    orbit_partition: OrbitPartition
    node_count: int
    group_order: int
    fixed: tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.generators.is_trivial


class _Search:
    def __init__(self, g: Graph, fixed: Iterable[int]):
        self.g = g
        self.rows = g.rows
        self.n = g.n
        self.fixed = tuple(sorted(set(fixed)))
        for v in self.fixed:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} not in graph of order {self.n}")
        self.node_count = 0

    def initial(self):
        fx = set(self.fixed)
        rest = [v for v in range(self.n) if v not in fx]
        cells = [[f] for f in self.fixed]
        if rest:
            cells.append(rest)
        self.node_count += 1
        return refine(self.rows, cells)

    def run(self, first_only: bool = False) -> AutResult:
        rows = self.rows
        cells = self.initial()
        path = []
        invs = [node_invariant(rows, cells)]
        while (t := target_cell(cells)) is not None:
            v0 = cells[t][0]
            path.append((cells, t, v0))
            cells = refine(rows, individualize(cells, t, v0))
            self.node_count += 1
            invs.append(node_invariant(rows, cells))
        self.invs = invs
        self.lab0 = [c[0] for c in cells]
        self.cert0 = leaf_certificate(rows, cells)

        gens: list[Permutation] = []
        order = 1
        for level in reversed(range(len(path))):
            cells, t, v0 = path[level]
            op = orbit_partition_from(self.n, gens)
            failed: list[int] = []
            for w in cells[t]:
                if w == v0 or op.same(w, v0) or any(op.same(w, f) for f in failed):
                    continue
                perm = self._match(cells, t, w, level + 1)
                if perm is None:
                    failed.append(w)
                    continue
                gens.append(perm)
                if first_only:
                    return self._result(gens, 0)
                op = orbit_partition_from(self.n, gens)
            order *= len(op.cell(v0))
        return self._result(gens, order)

    def _result(self, gens, order) -> AutResult:
        gs = GeneratorSet(self.n, tuple(gens))
        return AutResult(gs, orbit_partition_from(self.n, gs.gens), self.node_count, order, self.fixed)

    def _match(self, cells, t, w, depth):
        rows = self.rows
        cells = refine(rows, individualize(cells, t, w))
        self.node_count += 1
        if node_invariant(rows, cells) != self.invs[depth]:
            return None
        t2 = target_cell(cells)
        if t2 is None:
            if leaf_certificate(rows, cells) != self.cert0:
                return None
            images = [0] * self.n
            for i, v in enumerate(self.lab0):
                images[v] = cells[i][0]
            return Permutation(images)
        for u in cells[t2]:
            found = self._match(cells, t2, u, depth + 1)
            if found is not None:
                return found
        return None


def automorphism_generators(g: Graph, fixed: Iterable[int] = ()) -> AutResult:
    """Generators and orbits of the pointwise stabilizer of ``fixed`` in Aut(g)."""
    return _Search(g, fixed).run()


@lru_cache(maxsize=4096)
def _cached_generators(g: Graph, fixed: tuple[int, ...]) -> AutResult:
    return _Search(g, fixed).run()


def stabilizer(g: Graph, fixed: Iterable[int] = ()) -> AutResult:
    """Memoized :func:`automorphism_generators`; graphs are hashable and immutable."""
    return _cached_generators(g, tuple(sorted(set(fixed))))


def has_nontrivial_automorphism(g: Graph, fixed: Iterable[int] = ()) -> bool:
    return not _Search(g, fixed).run(first_only=True).is_trivial


def is_asymmetric(g: Graph) -> bool:
    return not has_nontrivial_automorphism(g)


def is_automorphism(g: Graph, p) -> bool:
    if len(p) != g.n or sorted(p) != list(range(g.n)):
        return False
    rows = g.rows
    for v in range(g.n):
        if mask_of(p[u] for u in bits(rows[v])) != rows[p[v]]:
            return False
    return True


def canonical_labeling(g: Graph) -> tuple[list[int], tuple[int, ...]]:
    """Return ``(lab, cert)``: position ``i`` of the canonical graph is vertex ``lab[i]``.

    Among all leaves of the search tree the one with the largest
    ``(invariant path, certificate)`` key wins. Children of a node that lie in
    the same orbit of the stabilizer of the node's individualized vertices
    are explored once.
    """
    rows = g.rows
    best: list = [None, None, None]  # invs, cert, lab

    def visit(cells, invs, prefix):
        if best[0] is not None and invs < best[0][:len(invs)]:
            return
        t = target_cell(cells)
        if t is None:
            cert = leaf_certificate(rows, cells)
            if best[0] is None or (invs, cert) > (best[0], best[1]):
                best[0], best[1], best[2] = invs, cert, [c[0] for c in cells]
            return
        op = stabilizer(g, prefix).orbit_partition
        seen = set()
        for w in cells[t]:
            r = op.rep(w)
            if r in seen:
                continue
            seen.add(r)
            child = refine(rows, individualize(cells, t, w))
            visit(child, invs + (node_invariant(rows, child),), prefix + (w,))

    root = refine(rows, [list(range(g.n))])
    visit(root, (node_invariant(rows, root),), ())
    return best[2], best[1]


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    _, cert = canonical_labeling(g)
    width = (g.n + 7) // 8
    return g.n.to_bytes(2, "big") + b"".join(r.to_bytes(width, "big") for r in cert)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.size == h.size and canonical_form(g) == canonical_form(h)
