"""Fixing sets and fixing numbers.

A set ``F`` fixes ``G`` when the only automorphism fixing every vertex of
``F`` is the identity. The exact solver works level by level: every set of
size ``k`` that survives pruning is extended by one representative of each
non-trivial orbit of its pointwise stabilizer. Conjugating by an
automorphism maps fixing sets to fixing sets of the same size, so one
representative per orbit loses nothing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .automorphisms import (
    AutResult,
    automorphism_generators,
    canonical_form,
    has_nontrivial_automorphism,
    stabilizer,
)
from .graph import Graph, components, induced_subgraph

EXACT_CAP = 512


class CapExceeded(RuntimeError):
    """The exact answer is unknown because the instance is above the cap."""


class HypothesisError(ValueError):
    """Input does not meet the hypothesis of the requested formula."""


@dataclass(frozen=True)
class FixingResult:
    fix_number: int
    witness: tuple[int, ...]
    optimal: bool
    sets_examined: int = 0


def is_fixing_set(g: Graph, fixed: Iterable[int]) -> bool:
    return not has_nontrivial_automorphism(g, fixed)


def greedy_fixing_set(g: Graph) -> FixingResult:
    """Fix the least vertex of a largest orbit until the stabilizer is trivial."""
    chosen: list[int] = []
    res = automorphism_generators(g)
    while not res.is_trivial:
        cells = res.orbit_partition.cells
        size = max(len(c) for c in cells)
        pick = min(c[0] for c in cells if len(c) == size)
        chosen.append(pick)
        res = automorphism_generators(g, chosen)
    return FixingResult(len(chosen), tuple(sorted(chosen)), False, len(chosen) + 1)


def remaining_lower_bound(res: AutResult) -> int:
    """Lower bound on how many more vertices must be fixed.

    Two independent bounds. Fixing one vertex divides the group order by at
    most the largest orbit size, and orbits never grow. Generators with
    pairwise disjoint supports each need their own fixed vertex.
    """
    if res.is_trivial:
        return 0
    largest = max(len(c) for c in res.orbit_partition.cells)
    by_order = 0
    reach = 1
    while reach < res.group_order:
        reach *= largest
        by_order += 1
    used = 0
    disjoint = 0
    for g in sorted(res.generators, key=lambda p: (len(p.support()), p)):
        sup = 0
        for v in g.support():
            sup |= 1 << v
        if not sup & used:
            used |= sup
            disjoint += 1
    return max(by_order, disjoint)


def _orbit_reps(res: AutResult) -> list[int]:
    return [c[0] for c in res.orbit_partition.cells if len(c) > 1]


def fixing_number(g: Graph, cap: int = EXACT_CAP) -> FixingResult:
    """Exact fixing number with a minimum witness."""
    if g.n > cap:
        raise CapExceeded(f"exact fixing number refused: order {g.n} exceeds cap {cap}")
    return _fixing_number(g)


@lru_cache(maxsize=2048)
def _fixing_number(g: Graph) -> FixingResult:
    root = automorphism_generators(g)
    if root.is_trivial:
        return FixingResult(0, (), True, 1)
    greedy = greedy_fixing_set(g)
    upper = greedy.fix_number
    examined = 1
    level: dict[tuple[int, ...], AutResult] = {(): root}
    for k in range(1, upper):
        nxt: dict[tuple[int, ...], AutResult] = {}
        seen: set[tuple[int, ...]] = set()
        for fset in sorted(level):
            for rep in _orbit_reps(level[fset]):
                child = tuple(sorted(fset + (rep,)))
                if child in seen:
                    continue
                seen.add(child)
                res = automorphism_generators(g, child)
                examined += 1
                if res.is_trivial:
                    return FixingResult(k, child, True, examined)
                if k + remaining_lower_bound(res) < upper:
                    nxt[child] = res
        level = nxt
        if not level:
            break
    return FixingResult(upper, greedy.witness, True, examined)


def find_fixing_set(g: Graph, size: int, allowed: Iterable[int] | None = None) -> tuple[int, ...] | None:
    """First fixing set of exactly ``size`` vertices drawn from ``allowed`` (exhaustive)."""
    pool = sorted(set(range(g.n) if allowed is None else allowed))
    for combo in itertools.combinations(pool, size):
        if is_fixing_set(g, combo):
            return combo
    return None


def fixed_vertices(g: Graph) -> list[int]:
    return stabilizer(g).orbit_partition.singletons()


@dataclass(frozen=True)
class RelativeFixingSet:
    vertices: frozenset[int]
    similar: bool


def relative_fixing_set(g: Graph, u: int, v: int) -> RelativeFixingSet:
    """Vertices ``x`` such that no automorphism fixing ``x`` carries ``u`` to ``v``.

    Since the stabilizer of ``x`` is a group, ``g(u) != v`` for all of it is
    the same as ``g(v) != u`` for all of it. When ``u`` and ``v`` are not
    similar every vertex qualifies and ``similar`` is False.
    """
    if u == v:
        raise ValueError("relative fixing set needs two distinct vertices")
    if not stabilizer(g).orbit_partition.same(u, v):
        return RelativeFixingSet(frozenset(range(g.n)), False)
    return RelativeFixingSet(
        frozenset(x for x in range(g.n) if not stabilizer(g, (x,)).orbit_partition.same(u, v)),
        True,
    )


def fixes_pair(g: Graph, x: int, u: int, v: int) -> bool:
    return not stabilizer(g, (x,)).orbit_partition.same(u, v)


@dataclass(frozen=True)
class DisconnectedFix:
    formula: int
    solver: int | None
    symmetric: tuple[tuple[int, ...], ...]
    asymmetric_classes: tuple[tuple[tuple[int, ...], ...], ...]
    component_fix: tuple[int, ...]
    isomorphic_symmetric_pair: bool
    witness: tuple[int, ...] | None = None
    details: dict = field(default_factory=dict)

    @property
    def agrees(self) -> bool | None:
        return None if self.solver is None else self.formula == self.solver


def fixing_number_disconnected(g: Graph, cap: int = EXACT_CAP) -> DisconnectedFix:
    """Fixing number of a graph with several components, each of order at least 2.

    Components with a nontrivial group contribute their own fixing number.
    Asymmetric components are grouped into isomorphism classes; a class of
    ``m`` copies contributes ``m - 1``. The exact solver runs on the whole
    graph when it is within ``cap`` so the two values can be compared.
    """
    comps = components(g)
    if len(comps) < 2:
        raise HypothesisError("graph is connected; the formula needs at least two components")
    if any(len(c) < 2 for c in comps):
        raise HypothesisError("graph has an isolated vertex; every component needs order >= 2")
    parts = [induced_subgraph(g, c)[0] for c in comps]
    comp_fix = tuple(_fixing_number(p).fix_number for p in parts)
    symmetric = []
    classes: dict[bytes, list[tuple[int, ...]]] = {}
    sym_forms = []
    for c, p, f in zip(comps, parts, comp_fix):
        if f > 0:
            symmetric.append(tuple(c))
            sym_forms.append(canonical_form(p))
        else:
            classes.setdefault(canonical_form(p), []).append(tuple(c))
    ordered = tuple(tuple(v) for _, v in sorted(classes.items(), key=lambda kv: kv[1][0]))
    formula = sum(f for f in comp_fix if f > 0) + sum(len(c) for c in ordered) - len(ordered)
    solver = witness = None
    if g.n <= cap:
        res = _fixing_number(g)
        solver, witness = res.fix_number, res.witness
    return DisconnectedFix(
        formula=formula,
        solver=solver,
        symmetric=tuple(symmetric),
        asymmetric_classes=ordered,
        component_fix=comp_fix,
        isomorphic_symmetric_pair=len(set(sym_forms)) < len(sym_forms),
        witness=witness,
    )
