import pytest

from fixgraph.formats import (
    FormatError,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    read_graphs,
)
from fixgraph.graph import complete, empty, path


@pytest.mark.parametrize(
    "text, graph",
    [(b"Bw", complete(3)), (b"A?", empty(2)), (b"A_", complete(2))],
)
def test_graph6_examples(text, graph):
    assert parse_graph6(text) == graph
    assert parse_graph6(text + b"\n") == graph
    assert emit_graph6(graph) == text


def test_graph6_accepts_str():
    assert parse_graph6("Bw") == complete(3)


@pytest.mark.parametrize(
    "bad",
    [b"", b"?", b"B", b"Bww", b"B!", b"A`", b"~?@A"],
)
def test_graph6_rejects_malformed(bad):
    with pytest.raises(FormatError):
        parse_graph6(bad)


def test_graph6_error_has_offset():
    with pytest.raises(FormatError) as info:
        parse_graph6(b"B!")
    assert info.value.position == 1


def test_edge_list_examples():
    assert parse_edge_list(b"n 3\n0 1\n1 2\n0 2\n") == complete(3)
    assert parse_edge_list(b"n 2\n") == empty(2)
    assert parse_edge_list(b"n 4\n# path\n0 1\n1 2\n2 3\n") == path(4)


@pytest.mark.parametrize(
    "bad, line",
    [(b"n 3\n0 1\nx y\n", 3), (b"n 3\n0 5\n", 2), (b"3\n", 1), (b"n 2\n0 0\n", 2)],
)
def test_edge_list_errors_carry_line(bad, line):
    with pytest.raises(FormatError) as info:
        parse_edge_list(bad)
    assert f"line {line}" in str(info.value)


def test_edge_list_round_trip():
    g = path(5)
    assert parse_edge_list(emit_edge_list(g)) == g
    assert parse_edge_list(emit_edge_list(empty(3))) == empty(3)


def test_read_graphs_multi_line():
    gs = read_graphs(b"Bw\nA_\n\n", "graph6")
    assert gs == [complete(3), complete(2)]
