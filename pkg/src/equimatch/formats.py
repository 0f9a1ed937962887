"""Text formats: graph6 (read/write), plain edge lists (read/write), DOT (write)."""

from __future__ import annotations

import re
from typing import Iterator

import numpy as np

from .graph import Graph, GraphError

HEADER = ">>graph6<<"
_EDGELIST_HEAD = re.compile(r"^\s*\d+\s+\d+\s*$")


class FormatError(ValueError):
    """Unparseable graph text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 1 << 18:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def _decode_n(data: bytes, base: int) -> tuple[int, int]:
    """Return ``(n, payload_start)``; ``base`` is the offset of ``data`` in the line."""
    if not data:
        raise FormatError("empty graph6 string", base)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    digits = data[start:start + width]
    if len(digits) < width:
        raise FormatError("truncated graph6 length prefix", base + len(data))
    n = 0
    for c in digits:
        n = (n << 6) | (c - 63)
    return n, start + width


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is allowed)."""
    line = text.strip()
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise FormatError("non-ASCII character in graph6 string", base + exc.start) from None
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise FormatError(f"invalid graph6 character {chr(c)!r}", base + i)
    n, start = _decode_n(data, base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[start:]
    if len(payload) < need:
        raise FormatError(
            f"graph6 payload has {len(payload)} bytes, {need} needed for n={n}",
            base + len(data))
    if len(payload) > need:
        raise FormatError("trailing data after graph6 payload", base + start + need)
    if nbits == 0:
        return Graph.empty(n)
    groups = np.frombuffer(payload, dtype=np.uint8) - 63
    bits = np.unpackbits(groups[:, None], axis=1)[:, 2:].ravel()
    if bits[nbits:].any():
        raise FormatError("nonzero padding bits in graph6 payload", base + len(data) - 1)
    k = np.flatnonzero(bits[:nbits]).astype(np.int64)
    # Bit k encodes pair (i, j), i < j, with k = j(j-1)/2 + i.
    j = ((1 + np.sqrt(1 + 8 * k.astype(np.float64))) // 2).astype(np.int64)
    j -= (j * (j - 1) // 2 > k)
    j += ((j + 1) * j // 2 <= k)
    i = k - j * (j - 1) // 2
    return _from_arrays(n, i, j)


def _from_arrays(n: int, i: np.ndarray, j: np.ndarray) -> Graph:
    src = np.concatenate([i, j])
    dst = np.concatenate([j, i])
    order = np.argsort(src, kind="stable")
    src = src[order]
    dst = dst[order]
    cuts = np.searchsorted(src, np.arange(1, n))
    return Graph(n, tuple(frozenset(part.tolist()) for part in np.split(dst, cuts)))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no header, no newline)."""
    n = g.n
    nbits = n * (n - 1) // 2
    bits = np.zeros(((nbits + 5) // 6) * 6, dtype=np.uint8)
    if g.m:
        pairs = np.array(list(g.edges()), dtype=np.int64)
        lo, hi = pairs[:, 0], pairs[:, 1]
        bits[hi * (hi - 1) // 2 + lo] = 1
    groups = np.packbits(bits.reshape(-1, 6), axis=1, bitorder="big")[:, 0] >> 2
    return _encode_n(n) + (groups.astype(np.uint8) + 63).tobytes().decode("ascii")


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``; ``#`` starts a comment."""
    rows = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((body, offset))
        offset += len(raw.encode())
    if not rows:
        raise FormatError("empty edge list", 0)
    head, at = rows[0]
    if not _EDGELIST_HEAD.match(head):
        raise FormatError("edge list must start with 'n m'", at)
    n, m = (int(x) for x in head.split())
    if len(rows) - 1 != m:
        raise FormatError(f"edge list declares {m} edges but has {len(rows) - 1}", at)
    edges = []
    for body, at in rows[1:]:
        parts = body.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"bad edge line {body!r}", at)
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n or u == v:
            raise FormatError(f"invalid edge ({u}, {v}) for n={n}", at)
        edges.append((u, v))
    g = Graph.from_edges(n, edges)
    if g.m != m:
        raise FormatError("edge list contains duplicate edges", rows[0][1])
    return g


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def detect_format(text: str) -> str:
    for line in text.splitlines():
        if line.strip():
            return "edgelist" if _EDGELIST_HEAD.match(line.split("#", 1)[0]) else "graph6"
    return "graph6"


def read_graphs(text: str, fmt: str = "auto") -> Iterator[Graph]:
    """Graphs in ``text``: one per non-empty line for graph6, one per text for edge lists."""
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edgelist":
        yield parse_edgelist(text)
    elif fmt == "graph6":
        for line in text.splitlines():
            if line.strip():
                yield parse_graph6(line.strip())
    else:
        raise ValueError(f"unknown format {fmt!r}")


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
