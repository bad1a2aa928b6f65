"""Codec for the graph6 ASCII format (headerless, one graph per line).

Layout: a size field (byte n+63 for n <= 62, or '~' followed by three
bytes carrying 18 bits for larger n), then ceil(n(n-1)/2 / 6) payload
bytes of 63 + 6 bits each.  Payload bits walk the upper triangle in
column-major pair order (0,1), (0,2), (1,2), (0,3), ... with zero
padding to a byte boundary.
"""

from __future__ import annotations

from minrank_atlas.graphs import MAX_ORDER, Graph


class Graph6Error(ValueError):
    """Malformed graph6 input; offset is the 0-based byte position."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def from_graph6(text: str) -> Graph:
    """Decode one headerless graph6 line (optional trailing newline)."""
    s = text
    if s.endswith("\n"):
        s = s[:-1]
    if s.endswith("\r"):
        s = s[:-1]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside graph6 range 63..126", off)

    if data[0] == 126:  # extended size field
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("8-byte size fields (n > 258047) are not supported", 0)
        if len(data) < 4:
            raise Graph6Error("truncated extended size field", len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body_at = 4
    else:
        n = data[0] - 63
        body_at = 1
    if n < 1:
        raise Graph6Error("graphs of order 0 are not supported", 0)
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the supported maximum {MAX_ORDER}", 0)

    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    if len(data) - body_at < nbytes:
        raise Graph6Error(
            f"payload too short: need {nbytes} bytes for order {n}", len(data)
        )
    if len(data) - body_at > nbytes:
        raise Graph6Error("trailing garbage after payload", body_at + nbytes)

    pairs = _PAIR_CACHE.get(n)
    if pairs is None:
        pairs = _PAIR_CACHE[n] = _pair_table(n)
    rows = [0] * n
    k = 0
    for off in range(nbytes):
        group = data[body_at + off] - 63
        for shift in range(5, -1, -1):
            bit = (group >> shift) & 1
            if k >= npairs:
                if bit:
                    raise Graph6Error("nonzero padding bit", body_at + off)
                continue
            if bit:
                i, j = pairs[k]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Minimal-length headerless encoding; requires order <= 62."""
    n = g.order
    if n > 62:
        raise ValueError("single-byte size field requires order <= 62")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append((g.adj[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k : k + 6]:
            group = (group << 1) | b
        out.append(chr(group + 63))
    return "".join(out)


def _pair_table(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


_PAIR_CACHE: dict[int, list[tuple[int, int]]] = {}
