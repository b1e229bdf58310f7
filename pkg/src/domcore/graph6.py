"""Strict reader and writer for the short-form graph6 encoding.

Covers graphs on 0..62 vertices: one header byte chr(n + 63), then the
upper triangle of the adjacency matrix in column order ((0,1), (0,2),
(1,2), (0,3), ...) packed six bits per printable byte, each offset by
63.  Padding bits in the final byte must be zero; the parser rejects
bad headers, wrong lengths, out-of-range bytes and nonzero padding
rather than guessing.
"""

from __future__ import annotations

from .graph import Graph, GraphError

MAX_GRAPH6_VERTICES = 62


class Graph6Error(GraphError):
    """Raised for malformed graph6 text or out-of-range graphs."""


def _data_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def write_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no trailing newline)."""
    if g.n > MAX_GRAPH6_VERTICES:
        raise Graph6Error(f"graph6 short form only covers n <= {MAX_GRAPH6_VERTICES}")
    out = [chr(g.n + 63)]
    group = 0
    filled = 0
    for col in range(1, g.n):
        for row in range(col):
            group = (group << 1) | ((g.adj[row] >> col) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        group <<= 6 - filled
        out.append(chr(group + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; raises Graph6Error on any deviation."""
    if not text:
        raise Graph6Error("empty graph6 string")
    values = []
    for i, ch in enumerate(text):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"byte {code!r} at position {i} outside graph6 range")
        values.append(code - 63)
    n = values[0]
    if n > MAX_GRAPH6_VERTICES:
        raise Graph6Error("multi-byte vertex counts are not supported")
    expected = 1 + _data_length(n)
    if len(values) != expected:
        raise Graph6Error(
            f"graph6 string for n={n} must be {expected} bytes, got {len(values)}"
        )
    adj = [0] * n
    bit_index = 0
    data = values[1:]
    for col in range(1, n):
        for row in range(col):
            group = data[bit_index // 6]
            if (group >> (5 - bit_index % 6)) & 1:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            bit_index += 1
    if data:
        used = bit_index % 6
        if used and data[-1] & ((1 << (6 - used)) - 1):
            raise Graph6Error("nonzero padding bits in final graph6 byte")
    return Graph(n, tuple(adj))
