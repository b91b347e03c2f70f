"""graph6 and edge-list serialisation.

The edge-list format is plain text: a header line ``"n m"`` followed by one
``"u v"`` line per edge with ``u < v``, sorted, LF terminated, 0-indexed.
graph6 follows the published definition used by nauty (optionally preceded
by the ``>>graph6<<`` header on decode).
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError, from_edges

__all__ = ["ParseError", "encode", "decode", "read_graph", "write_graph", "FORMATS"]

FORMATS = ("graph6", "edgelist")
_HEADER = b">>graph6<<"


class ParseError(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def _g6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])


def _encode_graph6(g: Graph) -> bytes:
    out = bytearray(_g6_size(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def _decode_graph6(data: bytes) -> Graph:
    start = 0
    if data.startswith(_HEADER):
        start = len(_HEADER)
    data = data.rstrip(b"\r\n")
    if len(data) <= start:
        raise ParseError("empty graph6 input", start)
    for off in range(start, len(data)):
        if not 63 <= data[off] <= 126:
            raise ParseError(f"byte {data[off]!r} outside the graph6 range 63..126", off)
    pos = start
    if data[pos] != 126:
        n, pos = data[pos] - 63, pos + 1
    elif len(data) > pos + 1 and data[pos + 1] == 126:
        if len(data) < pos + 8:
            raise ParseError("truncated 8-byte size field", len(data))
        n = 0
        for b in data[pos + 2:pos + 8]:
            n = n << 6 | (b - 63)
        pos += 8
    else:
        if len(data) < pos + 4:
            raise ParseError("truncated 4-byte size field", len(data))
        n = 0
        for b in data[pos + 1:pos + 4]:
            n = n << 6 | (b - 63)
        pos += 4
    nedge_bits = n * (n - 1) // 2
    need = (nedge_bits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} edge bytes for n={n}, found {len(body)}", pos + min(len(body), need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nedge_bits % 6:
        pad = (body[-1] - 63) & ((1 << (6 - nedge_bits % 6)) - 1)
        if pad:
            raise ParseError("nonzero padding bits", pos + len(body) - 1)
    return from_edges(n, edges)


def _encode_edgelist(g: Graph) -> bytes:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return ("\n".join(lines) + "\n").encode("ascii")


def _decode_edgelist(data: bytes) -> Graph:
    if not data.strip():
        raise ParseError("empty edge list", 0)
    offset = 0
    rows = []
    for raw in data.split(b"\n"):
        if raw.strip():
            rows.append((offset, raw))
        offset += len(raw) + 1

    def ints(off: int, raw: bytes) -> tuple[int, int]:
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {raw!r}", off)
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer token in {raw!r}", off) from None

    n, m = ints(*rows[0])
    if n < 0 or m < 0:
        raise ParseError("negative count in header", rows[0][0])
    if len(rows) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(rows) - 1}", rows[-1][0])
    edges = []
    seen = set()
    for off, raw in rows[1:]:
        u, v = ints(off, raw)
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"invalid edge {u} {v} for n={n}", off)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", off)
        seen.add(key)
        edges.append(key)
    return from_edges(n, edges)


def encode(g: Graph, format: str = "graph6") -> bytes:
    if format == "graph6":
        return _encode_graph6(g)
    if format == "edgelist":
        return _encode_edgelist(g)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def decode(data: bytes | str, format: str = "graph6") -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    if format == "graph6":
        return _decode_graph6(data)
    if format == "edgelist":
        return _decode_edgelist(data)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    return "graph6" if suffix in (".g6", ".graph6") else "edgelist"


def read_graph(path: str | Path, format: str | None = None) -> Graph:
    return decode(Path(path).read_bytes(), format or guess_format(path))


def write_graph(g: Graph, path: str | Path, format: str | None = None) -> None:
    data = encode(g, format or guess_format(path))
    if (format or guess_format(path)) == "graph6":
        data += b"\n"
    Path(path).write_bytes(data)
