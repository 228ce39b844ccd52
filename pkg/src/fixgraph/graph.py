"""Simple undirected graphs on dense vertex indices.

Adjacency is stored as one Python int per vertex (bit ``v`` of ``rows[u]`` is
set iff ``uv`` is an edge). Graphs are immutable; every constructor validates.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_ORDER = 4096

#: distance between vertices in different components
INF = math.inf


class GraphError(ValueError):
    """Invalid graph input (bad index, loop, size cap)."""


def check_order(n: int, cap: int | None = None) -> None:
    cap = MAX_ORDER if cap is None else cap
    if n < 1:
        raise GraphError(f"graph needs at least one vertex, got n={n}")
    if n > cap:
        raise GraphError(f"order {n} exceeds the size cap {cap}")


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        check_order(self.n)
        if len(self.rows) != self.n:
            raise GraphError("row count does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {u} has bits beyond n={self.n}")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            r = row
            while r:
                low = r & -r
                v = low.bit_length() - 1
                if not self.rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency at ({u}, {v})")
                r ^= low
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels must have one entry per vertex")

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.size})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return bits(self.rows[u])

    def closed_neighbors(self, u: int) -> list[int]:
        return bits(self.rows[u] | 1 << u)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u]) if u < v]

    def same_edges(self, other: Graph) -> bool:
        return self.n == other.n and self.rows == other.rows

    def with_labels(self, labels: Sequence) -> Graph:
        return Graph(self.n, self.rows, tuple(labels))


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_edges(n: int, edges: Iterable[tuple[int, int]], cap: int | None = None) -> Graph:
    check_order(n, cap)
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {pair} has an index outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge {pair}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_rows(rows: Sequence[int]) -> Graph:
    return Graph(len(rows), tuple(rows))


def named_family(family: str, n: int) -> Graph:
    if n < 1:
        raise GraphError(f"order must be positive, got {n}")
    if family == "path":
        return from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if family == "star":
        return from_edges(n, [(0, i) for i in range(1, n)])
    if family == "empty":
        return from_edges(n, [])
    raise GraphError(f"unknown family {family!r}")


def path(n):
    return named_family("path", n)


def cycle(n):
    return named_family("cycle", n)


def complete(n):
    return named_family("complete", n)


def star(n):
    return named_family("star", n)


def empty(n):
    return named_family("empty", n)


def bfs_distances(g: Graph, source: int) -> list:
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in bits(g.rows[u]):
            if dist[v] == INF:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop counts; ``INF`` marks pairs in different components."""

    table: tuple[tuple, ...]

    @property
    def n(self) -> int:
        return len(self.table)

    def __call__(self, u: int, v: int):
        return self.table[u][v]

    def eccentricity(self, v: int):
        return max(self.table[v])

    def sphere(self, v: int, i: int) -> list[int]:
        """Vertices at distance exactly ``i`` from ``v``."""
        return [u for u, d in enumerate(self.table[v]) if d == i]


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(bits(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return the subgraph induced by ``vertices`` and the new-to-old index map."""
    old = sorted(set(vertices))
    if not old:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    for v in old:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph of order {g.n}")
    pos = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        rows.append(mask_of(pos[u] for u in bits(g.rows[v]) if u in pos))
    return Graph(len(old), tuple(rows)), old


def disjoint_union(parts: Sequence[Graph]) -> tuple[Graph, list[int]]:
    """Block-diagonal union; the second value holds each part's first index."""
    if not parts:
        raise GraphError("disjoint union needs at least one part")
    offsets = []
    rows = []
    base = 0
    for p in parts:
        offsets.append(base)
        rows.extend(r << base for r in p.rows)
        base += p.n
    check_order(base)
    return Graph(base, tuple(rows)), offsets


def join_with_apex(g: Graph) -> Graph:
    """``G + K_1`` with the apex as vertex ``n``."""
    n = g.n
    check_order(n + 1)
    rows = [r | 1 << n for r in g.rows]
    rows.append((1 << n) - 1)
    return Graph(n + 1, tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
    rows = [0] * g.n
    for v in range(g.n):
        rows[perm[v]] = mask_of(perm[u] for u in bits(g.rows[v]))
    return Graph(g.n, tuple(rows))


def validate(g: Graph) -> None:
    """Re-check the structural invariants; raises GraphError on failure."""
    Graph(g.n, g.rows, g.labels)
