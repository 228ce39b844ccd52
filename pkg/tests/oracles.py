"""Brute-force reference implementations used only by the tests.

Nothing here touches the search engine: automorphisms come from enumerating
every bijection, distances from Floyd-Warshall, fixing numbers from trying
every subset in order of size.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np


def adjacency(g) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int8)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


@lru_cache(maxsize=None)
def _all_perms(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int16).reshape(-1, n)


def automorphisms(g) -> np.ndarray:
    """Every automorphism of ``g`` as rows of images (feasible for n <= 8)."""
    a = adjacency(g)
    perms = _all_perms(g.n)
    # a[p][:, p] == a  for every p, done in one shot
    ok = (a[perms[:, :, None], perms[:, None, :]] == a).all(axis=(1, 2))
    return perms[ok]


def aut_order(g) -> int:
    return len(automorphisms(g))


def orbits(g) -> list[list[int]]:
    auts = automorphisms(g)
    seen, cells = set(), []
    for v in range(g.n):
        if v in seen:
            continue
        cell = sorted(set(int(x) for x in auts[:, v]))
        seen.update(cell)
        cells.append(cell)
    return cells


def stabilizer_order(g, fixed) -> int:
    auts = automorphisms(g)
    fixed = list(fixed)
    if not fixed:
        return len(auts)
    return int((auts[:, fixed] == np.array(fixed)).all(axis=1).sum())


def fixing_number(g) -> tuple[int, tuple[int, ...]]:
    """Smallest ``k`` with a ``k``-subset whose stabilizer is trivial; least such subset."""
    auts = automorphisms(g)
    nontrivial = auts[(auts != np.arange(g.n)).any(axis=1)]
    if len(nontrivial) == 0:
        return 0, ()
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            idx = list(s)
            if not (nontrivial[:, idx] == np.array(idx)).all(axis=1).any():
                return k, s
    raise AssertionError("the full vertex set always fixes")


def is_fixing_set(g, fixed) -> bool:
    return stabilizer_order(g, fixed) == 1


def isomorphic(g, h) -> bool:
    if g.n != h.n or g.size != h.size:
        return False
    a, b = adjacency(g), adjacency(h)
    perms = _all_perms(g.n)
    return bool((a[perms[:, :, None], perms[:, None, :]] == b).all(axis=(1, 2)).any())


def distances(g) -> np.ndarray:
    """Floyd-Warshall; unreachable pairs come back as ``math.inf``."""
    inf = g.n + 1
    d = np.full((g.n, g.n), inf, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in g.edges():
        d[u, v] = d[v, u] = 1
    for k in range(g.n):
        d = np.minimum(d, d[:, k, None] + d[None, k, :])
    out = d.astype(float)
    out[d >= inf] = math.inf
    return out


def labeled_graph_classes(n: int) -> int:
    """Number of isomorphism classes among all labeled graphs on ``n`` vertices.

    Each labeled graph is reduced to the least edge bitmask over all
    relabelings; counting distinct minima counts classes.
    """
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(pairs)}
    images = [[index[tuple(sorted((p[u], p[v])))] for u, v in pairs] for p in perms]
    classes = set()
    for mask in range(1 << len(pairs)):
        on = [i for i in range(len(pairs)) if mask >> i & 1]
        classes.add(min(sum(1 << img[i] for i in on) for img in images))
    return len(classes)
