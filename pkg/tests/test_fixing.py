import oracles
import pytest

from fixgraph.corpus import ASYMMETRIC_6, all_graphs
from fixgraph.fixing import (
    CapExceeded,
    HypothesisError,
    find_fixing_set,
    fixed_vertices,
    fixing_number,
    fixing_number_disconnected,
    greedy_fixing_set,
    is_fixing_set,
    relative_fixing_set,
)
from fixgraph.graph import complete, cycle, disjoint_union, path, star


def test_is_fixing_set_examples():
    g = cycle(5)
    assert is_fixing_set(g, range(g.n))
    assert not is_fixing_set(cycle(4), [0])
    assert is_fixing_set(complete(3), [0, 1])


@pytest.mark.parametrize("g, value", [(complete(5), 4), (path(7), 1), (cycle(8), 2), (ASYMMETRIC_6, 0)])
def test_fixing_number_examples(g, value):
    res = fixing_number(g)
    assert res.fix_number == value and res.optimal
    assert len(res.witness) == value and is_fixing_set(g, res.witness)


def test_cap_refuses():
    with pytest.raises(CapExceeded):
        fixing_number(complete(6), cap=5)


@pytest.mark.parametrize("g, size", [(complete(4), 3), (path(5), 1), (ASYMMETRIC_6, 0)])
def test_greedy_examples(g, size):
    res = greedy_fixing_set(g)
    assert res.fix_number == size and not res.optimal
    assert is_fixing_set(g, res.witness)


def test_greedy_is_an_upper_bound():
    for g in all_graphs(5):
        assert greedy_fixing_set(g).fix_number >= fixing_number(g).fix_number


def test_fixed_vertices_examples():
    assert fixed_vertices(star(4)) == [0]
    assert fixed_vertices(path(3)) == [1]
    assert fixed_vertices(complete(3)) == []


def test_relative_fixing_set_examples():
    assert relative_fixing_set(path(3), 0, 2).vertices == {0, 2}
    assert relative_fixing_set(cycle(4), 0, 2).vertices == {0, 2}
    assert relative_fixing_set(complete(3), 0, 1).vertices == {0, 1}


def test_relative_fixing_set_dissimilar_pair():
    r = relative_fixing_set(path(3), 0, 1)
    assert not r.similar and r.vertices == set(range(3))


def test_relative_fixing_set_rejects_equal_vertices():
    with pytest.raises(ValueError):
        relative_fixing_set(path(3), 1, 1)


def test_relative_fixing_set_against_brute_force():
    g = cycle(6)
    auts = oracles.automorphisms(g)
    for u in range(6):
        for v in range(u + 1, 6):
            expected = {x for x in range(6) if not any(a[x] == x and a[u] == v for a in auts)}
            assert relative_fixing_set(g, u, v).vertices == expected


def test_find_fixing_set_restricted_pool():
    assert find_fixing_set(complete(4), 3, [1, 2, 3]) == (1, 2, 3)
    assert find_fixing_set(complete(4), 2) is None


@pytest.mark.parametrize(
    "parts, formula",
    [([ASYMMETRIC_6, ASYMMETRIC_6], 1), ([path(3), path(3)], 2), ([complete(2), cycle(3)], 3)],
)
def test_disconnected_examples(parts, formula):
    g, _ = disjoint_union(parts)
    res = fixing_number_disconnected(g)
    assert res.formula == formula
    assert res.solver == oracles.fixing_number(g)[0] if g.n <= 8 else res.solver == formula


def test_disconnected_hypotheses():
    with pytest.raises(HypothesisError):
        fixing_number_disconnected(path(4))
    g, _ = disjoint_union([complete(1), complete(3)])
    with pytest.raises(HypothesisError):
        fixing_number_disconnected(g)


def test_isomorphic_symmetric_flag():
    g, _ = disjoint_union([path(3), path(3)])
    assert fixing_number_disconnected(g).isomorphic_symmetric_pair
    g, _ = disjoint_union([complete(2), cycle(3)])
    assert not fixing_number_disconnected(g).isomorphic_symmetric_pair
