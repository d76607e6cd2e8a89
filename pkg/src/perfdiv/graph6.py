"""graph6 encoding restricted to the single-byte size field (n <= 62)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import MAX_ORDER, Graph, GraphError


class Graph6Error(GraphError):
    """Malformed or unsupported graph6 line; ``lineno`` is 1-based when known."""

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


def encode_graph6(g: Graph) -> str:
    n = g.n
    out = [chr(63 + n)]
    acc = nbits = 0
    rows = g.rows
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    line = line.rstrip("\r\n")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6Error("empty line")
    codes = [ord(c) - 63 for c in line]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error("character outside the graph6 range")
    n = codes[0]
    if n == 63:
        raise Graph6Error("multi-byte size fields are not supported")
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(codes) != 1 + nbytes:
        raise Graph6Error(f"expected {1 + nbytes} bytes for order {n}, got {len(codes)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if codes[1 + k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and codes[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph._trusted(n, tuple(rows))


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode lines in order, skipping blank ones; errors carry the line number."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield decode_graph6(line.strip())
        except Graph6Error as exc:
            raise Graph6Error(str(exc), lineno) from None


def load_corpus(path: str | Path) -> Iterator[Graph]:
    with open(path, encoding="ascii", errors="replace") as fh:
        yield from iter_graph6(fh)


def write_corpus(graphs: Iterable[Graph], path: str | Path) -> int:
    count = 0
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")
            count += 1
    return count
