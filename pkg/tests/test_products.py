import oracles
import pytest

from fixgraph.automorphisms import are_isomorphic, canonical_form, is_asymmetric
from fixgraph.corpus import ASYMMETRIC_6, all_graphs, connected_graphs
from fixgraph.graph import GraphError, complete, cycle, empty, induced_subgraph, path
from fixgraph.products import composition, corona, corona_iter


def test_composition_examples():
    assert composition(complete(2), complete(3)).graph == complete(6)
    assert are_isomorphic(composition(path(2), empty(2)).graph, cycle(4))
    g2 = path(4)
    assert composition(complete(1), g2).graph == g2


def test_composition_adjacency_rule():
    for g1 in all_graphs(3):
        for g2 in all_graphs(3):
            pg = composition(g1, g2)
            for x in range(pg.graph.n):
                a, v = pg.coord[x]
                for y in range(pg.graph.n):
                    b, w = pg.coord[y]
                    want = g1.has_edge(a, b) or (a == b and g2.has_edge(v, w))
                    assert pg.graph.has_edge(x, y) == want


def test_composition_slices_and_fibers():
    pg = composition(path(3), path(2))
    assert pg.slice(1) == [2, 3]
    assert pg.fiber(1) == [1, 3, 5]
    assert pg.p1(5) == 2 and pg.p2(5) == 1


def test_corona_examples():
    assert corona(complete(1), complete(3)).graph == complete(4)
    assert are_isomorphic(corona(path(2), complete(1)).graph, path(4))
    pg = corona(path(2), path(2))
    assert pg.graph.n == 6 and pg.graph.size == 7


def test_corona_layout():
    pg = corona(path(3), path(2))
    assert pg.roots == [0, 1, 2]
    assert pg.copy(1) == [5, 6]
    assert pg.coord[6] == ("copy", 1, 1)
    for i in range(3):
        assert all(pg.graph.has_edge(i, v) for v in pg.copy(i))
        h, _ = induced_subgraph(pg.graph, pg.copy(i))
        assert canonical_form(h) == canonical_form(path(2))


def test_corona_iter_examples():
    assert corona_iter(path(2), path(2), 1).graph == corona(path(2), path(2)).graph
    assert corona_iter(path(2), path(2), 2).graph.n == 18
    assert corona_iter(complete(1), complete(1), 2).graph.n == 4


def test_corona_iter_cap_message():
    with pytest.raises(GraphError, match="54"):
        corona_iter(path(2), path(2), 3, cap=50)


def test_asymmetric_factors_stay_asymmetric():
    assert is_asymmetric(composition(ASYMMETRIC_6, ASYMMETRIC_6).graph)
    assert is_asymmetric(corona(ASYMMETRIC_6, ASYMMETRIC_6).graph)


def test_product_distances_match_floyd_warshall():
    from fixgraph.graph import all_pairs_distances

    for g1 in connected_graphs(3):
        for g2 in all_graphs(3):
            g = composition(g1, g2).graph
            d, ref = all_pairs_distances(g), oracles.distances(g)
            assert all(d(u, v) == ref[u, v] for u in range(g.n) for v in range(g.n))


def test_sidecar():
    side = corona(path(2), path(2)).to_sidecar()
    assert side["kind"] == "corona" and side["order"] == 6 and side["coord"][0] == ["root", 0]
