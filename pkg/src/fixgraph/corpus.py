"""Small-graph corpora for scans: exhaustive lists and seeded mixtures."""

from __future__ import annotations

import random
from functools import lru_cache

from .automorphisms import canonical_form, is_asymmetric
from .graph import Graph, disjoint_union, from_edges, is_connected

#: the 6-vertex asymmetric graph used throughout the fixtures
ASYMMETRIC_6 = from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3), (0, 5)])


@lru_cache(maxsize=None)
def graphs_of_order(n: int) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices up to isomorphism, in a fixed order.

    Every graph on ``n`` vertices arises from one on ``n - 1`` vertices by
    adding a vertex with some neighbourhood; duplicates are removed by
    canonical form.
    """
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    found: dict[bytes, Graph] = {}
    for small in graphs_of_order(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = [r | ((nbrs >> u) & 1) << (n - 1) for u, r in enumerate(small.rows)]
            rows.append(nbrs)
            g = Graph(n, tuple(rows))
            found.setdefault(canonical_form(g), g)
    return tuple(g for _, g in sorted(found.items(), key=lambda kv: (kv[1].size, kv[0])))


def all_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    return [g for n in range(min_n, max_n + 1) for g in graphs_of_order(n)]


def connected_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    return [g for g in all_graphs(max_n, min_n) if is_connected(g)]


def asymmetric_graphs(n: int) -> list[Graph]:
    return [g for g in graphs_of_order(n) if is_asymmetric(g)]


def pair_corpus(g1_max: int, g2_max: int) -> list[tuple[Graph, Graph]]:
    """Every connected ``G1`` on at most ``g1_max`` vertices against every ``G2``."""
    return [(g1, g2) for g1 in connected_graphs(g1_max) for g2 in all_graphs(g2_max)]


def multi_component_corpus(count: int = 50, seed: int = 0, max_order: int = 18) -> list[Graph]:
    """Seeded graphs with 2-3 components, each of order >= 2.

    The pool mixes every connected graph on 2-4 vertices (all symmetric) with
    the connected asymmetric graphs on 6 vertices; roughly half the draws
    repeat an asymmetric component so twin classes occur often.
    """
    rng = random.Random(seed)
    symmetric = connected_graphs(4, min_n=2)
    asym = [g for g in asymmetric_graphs(6) if is_connected(g)]
    out: list[Graph] = []
    seen: set[bytes] = set()
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 200 * count:
            raise RuntimeError("could not draw enough distinct multi-component graphs")
        parts = []
        if rng.random() < 0.5:
            twin = rng.choice(asym)
            parts += [twin, twin]
        k = rng.randint(2, 3) - len(parts) // 2
        for _ in range(max(k, 0)):
            parts.append(rng.choice(symmetric) if rng.random() < 0.6 else rng.choice(asym))
        if len(parts) < 2 or sum(p.n for p in parts) > max_order:
            continue
        g, _ = disjoint_union(parts)
        key = canonical_form(g)
        if key in seen:
            continue
        seen.add(key)
        out.append(g)
    return out
