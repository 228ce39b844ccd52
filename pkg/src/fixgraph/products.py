"""Composition (lexicographic) and corona products with coordinate tables.

Index layouts are fixed:

* composition ``G1[G2]``: vertex ``(a, v)`` sits at ``a * n + v``;
* corona ``G1 o G2``: roots ``0..m-1`` first, then copy ``i`` of ``G2`` at
  ``m + i*n .. m + (i+1)*n - 1`` with its ``j``-th vertex at ``m + i*n + j``;
* iterated corona: each level is ``corona(previous level, G2)``, so the
  layout above applies level by level.

Code that needs a slice, a copy or a projection should go through the helpers
here rather than redo the arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph, GraphError, MAX_ORDER, check_order, components


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    kind: str
    m: int
    n: int
    coord: tuple
    g1: Graph
    g2: Graph
    k: int = 1
    levels: tuple = field(default=(), repr=False)

    # composition -----------------------------------------------------
    def vertex(self, a: int, v: int) -> int:
        return a * self.n + v

    def slice(self, a: int) -> list[int]:
        """``G_2(a)``: the vertices with first coordinate ``a``."""
        return [a * self.n + v for v in range(self.n)]

    def fiber(self, b: int) -> list[int]:
        """``G_1(b)``: the vertices with second coordinate ``b``."""
        return [a * self.n + b for a in range(self.m)]

    def component_slices(self, a: int) -> list[list[int]]:
        """``G_2^j(a)`` for each component ``j`` of ``G_2`` (ordered by least vertex)."""
        return [[a * self.n + v for v in comp] for comp in components(self.g2)]

    def p1(self, x: int) -> int:
        return self.coord[x][0] if self.kind == "composition" else self.coord[x][1]

    def p2(self, x: int) -> int:
        return self.coord[x][1]

    # corona ----------------------------------------------------------
    @property
    def roots(self) -> list[int]:
        base = self.graph.n // (self.n + 1)
        return list(range(base))

    def copy(self, i: int) -> list[int]:
        """``V_i``: the copy of ``G_2`` attached to root ``i``."""
        base = self.graph.n // (self.n + 1)
        start = base + i * self.n
        return list(range(start, start + self.n))

    def to_sidecar(self) -> dict:
        return {
            "kind": self.kind,
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "order": self.graph.n,
            "coord": [list(c) for c in self.coord],
        }

    def sidecar_json(self) -> str:
        return json.dumps(self.to_sidecar(), sort_keys=True)


def composition(g1: Graph, g2: Graph, cap: int = MAX_ORDER) -> ProductGraph:
    m, n = g1.n, g2.n
    order = m * n
    if order > cap:
        raise GraphError(f"composition order {order} exceeds the size cap {cap}")
    check_order(order)
    full2 = (1 << n) - 1
    rows = []
    for a in range(m):
        across = 0
        for b in range(m):
            if g1.rows[a] >> b & 1:
                across |= full2 << (b * n)
        for v in range(n):
            rows.append(across | g2.rows[v] << (a * n))
    coord = tuple((a, v) for a in range(m) for v in range(n))
    g = Graph(order, tuple(rows), coord)
    deg1, deg2 = g1.degrees(), g2.degrees()
    for (a, v), d in zip(coord, g.degrees()):
        if d != deg1[a] * n + deg2[v]:
            raise AssertionError(f"degree identity fails at ({a}, {v})")
    return ProductGraph(g, "composition", m, n, coord, g1, g2)


def corona(g1: Graph, g2: Graph, cap: int = MAX_ORDER) -> ProductGraph:
    m, n = g1.n, g2.n
    order = m * (n + 1)
    if order > cap:
        raise GraphError(f"corona order {order} exceeds the size cap {cap}")
    check_order(order)
    block = (1 << n) - 1
    rows = []
    for i in range(m):
        rows.append(g1.rows[i] | block << (m + i * n))
    for i in range(m):
        start = m + i * n
        for j in range(n):
            rows.append(g2.rows[j] << start | 1 << i)
    coord = tuple([("root", i) for i in range(m)] + [("copy", i, j) for i in range(m) for j in range(n)])
    g = Graph(order, tuple(rows), coord)
    expected = g1.size + m * g2.size + m * n
    if g.size != expected:
        raise AssertionError(f"corona has {g.size} edges, expected {expected}")
    return ProductGraph(g, "corona", m, n, coord, g1, g2)


def corona_iter(g1: Graph, g2: Graph, k: int, cap: int = MAX_ORDER) -> ProductGraph:
    """``G1 o^k G2 = (G1 o^(k-1) G2) o G2``; every level is kept in ``levels``."""
    if k < 1:
        raise GraphError(f"corona level must be >= 1, got {k}")
    order = g1.n * (g2.n + 1) ** k
    if order > cap or order > MAX_ORDER:
        raise GraphError(f"iterated corona order {order} = {g1.n}*({g2.n}+1)^{k} exceeds the size cap {min(cap, MAX_ORDER)}")
    levels = []
    base = g1
    for _ in range(k):
        step = corona(base, g2)
        levels.append(step)
        base = step.graph
    last = levels[-1]
    coord = tuple(("level", k) + c for c in last.coord)
    if k == 1:
        return last
    return ProductGraph(last.graph, "corona_iter", g1.n, g2.n, coord, g1, g2, k, tuple(levels))
