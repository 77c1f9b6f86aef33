"""graph6 text codec for graphs with at most 62 vertices.

Layout: one order byte ``n + 63``, then the upper triangle of the adjacency
matrix in column order (``(0,1), (0,2), (1,2), (0,3), ...``) packed six bits
per byte, most significant bit first, each byte offset by 63 and the final
byte zero-padded. Only the single-byte order form is supported.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph

MAX_G6_ORDER = 62
HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Raised for text that is not a well-formed single-byte-order graph6 line."""


def _payload_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def encode(g: Graph) -> str:
    n = g.n
    if n > MAX_G6_ORDER:
        raise Graph6Error(f"order {n} needs the multi-byte graph6 form, which is not supported")
    adj = g.adj
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(text: str) -> Graph:
    line = text.rstrip("\r\n")
    if not line:
        raise Graph6Error("empty graph6 line")
    codes = [ord(c) for c in line]
    for pos, c in enumerate(codes):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c} at position {pos} is outside the graph6 range 63..126")
    n = codes[0] - 63
    if n > MAX_G6_ORDER:
        raise Graph6Error("orders above 62 (multi-byte graph6 form) are not supported")
    need = _payload_length(n)
    payload = codes[1:]
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: expected {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise Graph6Error(f"trailing data: expected {need} payload bytes, got {len(payload)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if k % 6:
        if (payload[-1] - 63) & ((1 << (6 - k % 6)) - 1):
            raise Graph6Error("non-zero padding bits")
    return Graph(n, adj)


def read_lines(stream: TextIO) -> Iterator[str]:
    """Non-blank lines of a graph6 stream, terminators and any ``>>graph6<<`` header stripped."""
    for line in stream:
        line = line.strip()
        if line.startswith(HEADER):
            line = line[len(HEADER):]
        if line:
            yield line


def write_graphs(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(encode(g) + "\n")
