import pytest

from fixgraph.graph import (
    INF,
    Graph,
    GraphError,
    all_pairs_distances,
    complete,
    components,
    cycle,
    disjoint_union,
    empty,
    from_edges,
    induced_subgraph,
    join_with_apex,
    named_family,
    path,
    star,
)


def test_from_edges_examples():
    k3 = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert k3 == complete(3)
    e2 = from_edges(2, [])
    assert e2.size == 0 and e2.n == 2
    assert from_edges(4, [(0, 1), (1, 2), (2, 3)]) == path(4)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_from_edges_rejects_bad_pairs(edges):
    with pytest.raises(GraphError):
        from_edges(3, edges)


def test_order_must_be_positive():
    with pytest.raises(GraphError):
        from_edges(0, [])


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_named_families():
    assert named_family("complete", 4).size == 6
    assert star(4).degrees() == [3, 1, 1, 1]
    assert set(cycle(5).degrees()) == {2}
    assert empty(3).size == 0
    with pytest.raises(GraphError):
        named_family("wheel", 5)


def test_distances():
    assert all_pairs_distances(path(4))(0, 3) == 3
    two_k2, _ = disjoint_union([complete(2), complete(2)])
    d = all_pairs_distances(two_k2)
    assert d(0, 2) == INF and d(0, 1) == 1
    c6 = all_pairs_distances(cycle(6))
    assert c6(0, 3) == 3 and c6.eccentricity(0) == 3
    assert c6.sphere(0, 2) == [2, 4]


def test_components():
    assert components(complete(3)) == [[0, 1, 2]]
    assert components(empty(3)) == [[0], [1], [2]]
    g, offsets = disjoint_union([path(2), path(3)])
    assert components(g) == [[0, 1], [2, 3, 4]]
    assert offsets == [0, 2]


def test_induced_subgraph():
    h, idx = induced_subgraph(complete(4), [0, 1, 2])
    assert h == complete(3) and idx == [0, 1, 2]
    h, idx = induced_subgraph(path(4), [0, 2])
    assert h == empty(2) and idx == [0, 2]
    h, _ = induced_subgraph(cycle(5), [0, 1, 2])
    assert h == path(3)


def test_disjoint_union():
    g, _ = disjoint_union([complete(2), complete(2)])
    assert (g.n, g.size, len(components(g))) == (4, 2, 2)
    g, _ = disjoint_union([path(3)])
    assert g == path(3)
    g, _ = disjoint_union([complete(1), complete(3)])
    assert g.degrees() == [0, 2, 2, 2]


def test_join_with_apex():
    assert join_with_apex(complete(3)) == complete(4)
    s = join_with_apex(empty(3))
    assert s.degrees() == [1, 1, 1, 3]
    assert join_with_apex(path(3)).degree(3) == 3


def test_labels_do_not_affect_equality():
    g = complete(2).with_labels(["a", "b"])
    assert g == complete(2) and hash(g) == hash(complete(2))
