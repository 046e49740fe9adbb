"""Text formats: graph6 (bit-exact) and a plain edge-list format.

graph6 encodes a simple undirected graph as printable ASCII: a size
header N(n) followed by the upper triangle of the adjacency matrix,
column by column ((0,1), (0,2), (1,2), (0,3), ...), packed MSB-first
into 6-bit groups, each group printed as its value + 63. The size
header is one byte n+63 for n <= 62, '~' plus three 6-bit bytes for
n <= 258047, and '~~' plus six 6-bit bytes up to 2^36 - 1.

The edge-list format is line oriented: an "n m" header line, then m
lines "u v"; '#' starts a comment anywhere.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, build_graph

_G6_HEADER = ">>graph6<<"
_G6_MAX_N = (1 << 36) - 1


class Graph6Error(GraphError):
    """Malformed graph6 input; the message carries the byte offset."""


class TooLargeError(GraphError):
    """The graph exceeds the graph6 size limit."""


class EdgeListError(GraphError):
    """Malformed edge-list input; the message carries the line number."""


def _g6_byte(text: str, pos: int) -> int:
    if pos >= len(text):
        raise Graph6Error(f"byte {pos}: unexpected end of input")
    value = ord(text[pos]) - 63
    if not (0 <= value <= 63):
        raise Graph6Error(f"byte {pos}: character {text[pos]!r} outside graph6 range")
    return value


def _parse_size(text: str) -> tuple[int, int]:
    """Decode the N(n) header; returns (n, offset of first adjacency byte)."""
    first = _g6_byte(text, 0)
    if first < 63:
        return first, 1
    second = _g6_byte(text, 1)
    if second < 63:
        n = 0
        for pos in range(1, 4):
            n = (n << 6) | _g6_byte(text, pos)
        return n, 4
    n = 0
    for pos in range(2, 8):
        n = (n << 6) | _g6_byte(text, pos)
    return n, 8


def parse_graph6(line: str) -> Graph:
    """Parse one graph6 line (an optional '>>graph6<<' prefix is allowed)."""
    text = line.strip()
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):].strip()
    if not text:
        raise Graph6Error("byte 0: empty graph6 line")
    n, offset = _parse_size(text)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(text) != offset + nbytes:
        raise Graph6Error(
            f"byte {min(len(text), offset + nbytes)}: expected {offset + nbytes} "
            f"bytes for n={n}, got {len(text)}"
        )
    edges = []
    bit = 0
    current = 0
    pos = offset - 1
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            if bit % 6 == 0:
                pos += 1
                current = _g6_byte(text, pos)
            if current & (1 << (5 - bit % 6)):
                edges.append((u, v))
            bit += 1
    return build_graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line; inverse of `parse_graph6`."""
    n = g.n
    if n > _G6_MAX_N:
        raise TooLargeError(f"graph6 supports at most {_G6_MAX_N} vertices")
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        head = [126, 126] + [((n >> (6 * s)) & 63) + 63 for s in range(5, -1, -1)]
    out = [chr(b) for b in head]
    current = 0
    filled = 0
    for v in range(1, n):
        nbrs = set(g.adj[v])
        for u in range(v):
            current = (current << 1) | (1 if u in nbrs else 0)
            filled += 1
            if filled == 6:
                out.append(chr(current + 63))
                current = 0
                filled = 0
    if filled:
        current <<= 6 - filled
        out.append(chr(current + 63))
    return "".join(out)


def parse_edgelist(text: str) -> Graph:
    """Parse the "n m" edge-list format.

    Structural problems raise `EdgeListError`; bad endpoints raise the
    same errors `build_graph` would, all tagged with a line number.
    """
    from .graphs import SelfLoopError, VertexRangeError

    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected two integers, got {raw!r}")
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError(f"line {lineno}: header counts must be nonnegative")
            header = (a, b)
        else:
            if a == b:
                raise SelfLoopError(f"line {lineno}: self-loop at vertex {a}")
            if not (0 <= a < header[0]) or not (0 <= b < header[0]):
                raise VertexRangeError(
                    f"line {lineno}: edge ({a}, {b}) outside vertex range 0..{header[0] - 1}"
                )
            edges.append((a, b))
    if header is None:
        raise EdgeListError("line 1: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise EdgeListError(f"header promises {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def write_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def sniff_format(text: str) -> str:
    """Guess the format: a first non-comment line of two decimal integers
    means edge list, anything else graph6 (graph6 bytes never contain a
    space, so the guess cannot misfire on valid input)."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) == 2 and all(f.lstrip("-").isdigit() for f in fields):
            return "edgelist"
        return "g6"
    return "g6"


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse either supported format, sniffing when fmt is None."""
    if fmt is None:
        fmt = sniff_format(text)
    if fmt == "g6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise GraphError(f"unknown format {fmt!r} (expected 'g6' or 'edgelist')")


def write_graph(g: Graph, fmt: str = "g6") -> str:
    if fmt == "g6":
        return write_graph6(g) + "\n"
    if fmt == "edgelist":
        return write_edgelist(g)
    raise GraphError(f"unknown format {fmt!r} (expected 'g6' or 'edgelist')")
