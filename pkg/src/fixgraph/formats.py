"""graph6 (short form) and plain edge-list codecs."""

from __future__ import annotations

from typing import Iterator

from .graph import Graph, GraphError, bits, from_edges

GRAPH6_MAX_N = 62


class FormatError(ValueError):
    """Malformed graph text; ``position`` is a byte offset or line number."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        super().__init__(message)


def _as_bytes(data) -> bytes:
    return data.encode("ascii") if isinstance(data, str) else bytes(data)


def parse_graph6(line) -> Graph:
    data = _as_bytes(line)
    if data.endswith(b"\r\n"):
        data = data[:-2]
    elif data.endswith(b"\n"):
        data = data[:-1]
    if data.startswith(b">>graph6<<"):
        raise FormatError("graph6 header is not supported", 0)
    if not data:
        raise FormatError("empty graph6 string", 0)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b!r} at offset {i} is outside 63..126", i)
    n = data[0] - 63
    if n > GRAPH6_MAX_N:
        raise FormatError(f"extended size header (n > {GRAPH6_MAX_N}) is not supported", 0)
    if n == 0:
        raise FormatError("graph6 encodes an empty vertex set", 0)
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    body = data[1:]
    if len(body) != want:
        raise FormatError(
            f"expected {want} data bytes for n={n}, found {len(body)}",
            1 + min(len(body), want),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        pad = (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise FormatError("nonzero padding bits", len(data) - 1)
    return from_edges(n, edges)


def emit_graph6(g: Graph) -> bytes:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise FormatError(f"graph6 short form holds at most {GRAPH6_MAX_N} vertices, got {n}")
    out = bytearray([n + 63])
    acc = 0
    count = 0
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            count += 1
            if count == 6:
                out.append(acc + 63)
                acc = count = 0
    if count:
        out.append((acc << (6 - count)) + 63)
    return bytes(out)


def graph6_str(g: Graph) -> str:
    return emit_graph6(g).decode("ascii")


def parse_edge_list(text) -> Graph:
    data = _as_bytes(text).decode("ascii", errors="replace")
    n = None
    pairs = []
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n" or not fields[1].isdigit():
                raise FormatError(f"line {lineno}: expected header 'n <count>', got {raw!r}", lineno)
            n = int(fields[1])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise FormatError(f"line {lineno}: expected 'u v', got {raw!r}", lineno)
        u, v = int(fields[0]), int(fields[1])
        if u >= n or v >= n:
            raise FormatError(f"line {lineno}: index out of range for n={n}", lineno)
        if u == v:
            raise FormatError(f"line {lineno}: loop edge ({u}, {v})", lineno)
        pairs.append((u, v))
    if n is None:
        raise FormatError("missing 'n <count>' header", 1)
    try:
        return from_edges(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc), 1) from exc


def emit_edge_list(g: Graph) -> bytes:
    lines = [f"n {g.n}"]
    for u in range(g.n):
        for v in bits(g.rows[u]):
            if u < v:
                lines.append(f"{u} {v}")
    return ("\n".join(lines) + "\n").encode("ascii")


def read_graph6_lines(data) -> Iterator[Graph]:
    """Yield one graph per non-blank line; errors carry the line number."""
    for lineno, line in enumerate(_as_bytes(data).splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}", lineno) from exc


def read_graphs(data, fmt: str) -> list[Graph]:
    if fmt == "graph6":
        return list(read_graph6_lines(data))
    if fmt == "edgelist":
        return [parse_edge_list(data)]
    raise FormatError(f"unknown format {fmt!r}")
