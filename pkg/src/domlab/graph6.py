"""graph6 reading and writing.

Only the undirected format is supported.  The upper triangle is read column by
column (``(0,1), (0,2), (1,2), (0,3), ...``), packed into 6-bit groups
big-endian, and every group is offset by 63.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import IO

from .graph import Graph

__all__ = ["Graph6Error", "parse_graph6", "emit_graph6", "read_graph6", "write_graph6", "HEADER"]

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 data; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int, lineno: int | None = None) -> None:
        where = f"byte {offset}" if lineno is None else f"line {lineno}, byte {offset}"
        super().__init__(f"{message} ({where})")
        self.message = message
        self.offset = offset
        self.lineno = lineno


def _encode_order(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def _decode_order(data: str, start: int) -> tuple[int, int]:
    def group(i: int) -> int:
        if i >= len(data):
            raise Graph6Error("line ends inside the order prefix", i)
        c = ord(data[i]) - 63
        if not 0 <= c <= 63:
            raise Graph6Error(f"invalid character {data[i]!r}", i)
        return c

    first = group(start)
    if first != 63:
        return first, start + 1
    if start + 1 < len(data) and data[start + 1] == "~":
        n = 0
        for i in range(start + 2, start + 8):
            n = n << 6 | group(i)
        if n < 258048:
            raise Graph6Error("non-minimal 8-byte order prefix", start)
        return n, start + 8
    n = 0
    for i in range(start + 1, start + 4):
        n = n << 6 | group(i)
    if n < 63:
        raise Graph6Error("non-minimal 4-byte order prefix", start)
    return n, start + 4


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    out = [_encode_order(g.n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line; a leading ``>>graph6<<`` header is ignored."""
    data = line.rstrip("\r\n")
    start = len(HEADER) if data.startswith(HEADER) else 0
    if start >= len(data):
        raise Graph6Error("empty graph6 line", start)
    n, pos = _decode_order(data, start)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data bytes, found {len(body)}", len(data))
    if len(body) > need:
        raise Graph6Error("trailing characters after graph data", pos + need)
    adj = [0] * n
    i, j = 0, 1
    for k, ch in enumerate(body):
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise Graph6Error(f"invalid character {ch!r}", pos + k)
        for shift in range(5, -1, -1):
            bit_index = 6 * k + 5 - shift
            if bit_index >= nbits:
                if c & ((1 << (shift + 1)) - 1):
                    raise Graph6Error("nonzero padding bits", pos + k)
                break
            if c >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, adj)


def read_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for every non-blank line (1-based numbering).

    Errors are re-raised as :class:`Graph6Error` carrying the line number.
    """
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped or stripped == HEADER:
            continue
        try:
            yield lineno, parse_graph6(stripped)
        except Graph6Error as exc:
            raise Graph6Error(exc.message, exc.offset, lineno) from exc


def write_graph6(graphs: Iterable[Graph], out: IO[str]) -> None:
    for g in graphs:
        out.write(emit_graph6(g))
        out.write("\n")
