"""Undirected simple graphs on dense 0-based indices, plus distances and I/O.

Graphs are immutable after construction (build via :meth:`Graph.from_edges`
or :meth:`Graph.from_edge_mask`) so they can be shared freely across
worker processes.  Adjacency is stored as one bitmask int per vertex, which
keeps row scans and pairwise intersections at a handful of machine-word
operations for the small graphs this toolkit sweeps.

Distances use the flat sentinel convention: the value ``n`` (one past the
largest possible hop count) stands for "unreachable".  It appears only for
disconnected graphs and is exposed as :attr:`DistanceMatrix.sentinel` and
as the return value of :func:`diameter` on disconnected input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _kernels

_G6_MAX_N = 258047  # largest order encodable with the 4-byte size header


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the first offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: ``n`` vertices, bitmask adjacency ``rows``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise ValueError("adjacency row count != n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"adjacency bit out of range in row {v}")
        for v in range(self.n):
            for w in range(v + 1, self.n):
                if ((self.rows[v] >> w) & 1) != ((self.rows[w] >> v) & 1):
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; ignores duplicate edges."""
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop ({u},{v}) not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Build from a column-major upper-triangle bit mask (MSB first).

        Pair (i, j) with i < j sits at bit index ``j*(j-1)//2 + i`` counted
        from the most significant end -- the same order graph6 uses.
        """
        nb = n * (n - 1) // 2
        if mask >> nb:
            raise ValueError("edge mask has more bits than n allows")
        rows = [0] * n
        idx = 0
        for j in range(1, n):
            for i in range(j):
                if (mask >> (nb - 1 - idx)) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                idx += 1
        return cls(n, tuple(rows))

    def edge_mask(self) -> int:
        """Column-major upper-triangle bit mask of this graph (MSB first)."""
        mask = 0
        for j in range(1, self.n):
            for i in range(j):
                mask = (mask << 1) | ((self.rows[i] >> j) & 1)
        return mask

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return bin(self.rows[v]).count("1")

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographic."""
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1

    @property
    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; entries equal to ``sentinel`` mean unreachable."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def sentinel(self) -> int:
        return self.n

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.rows[v]


def bfs_distances(g: Graph, source: int) -> tuple[int, ...]:
    """Exact hop counts from ``source``; unreachable vertices hold ``g.n``."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    n = g.n
    full = (1 << n) - 1
    dist = [n] * n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.rows[low.bit_length() - 1]
            f &= f - 1
        nxt &= full & ~seen
        f = nxt
        while f:
            low = f & -f
            dist[low.bit_length() - 1] = d
            f &= f - 1
        seen |= nxt
        frontier = nxt
    return tuple(dist)


def all_pairs(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; O(n*(n+m))."""
    rows = _kernels.all_pairs_dists(g.n, g.rows)
    return DistanceMatrix(g.n, tuple(tuple(r) for r in rows))


def is_connected(g: Graph) -> bool:
    """True iff a BFS from vertex 0 reaches every vertex."""
    seen = 1
    frontier = 1
    full = (1 << g.n) - 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.rows[low.bit_length() - 1]
            f &= f - 1
        frontier = nxt & full & ~seen
        seen |= frontier
    return seen == full


def eccentricity(g: Graph, v: int) -> int:
    """Largest hop count from ``v``; raises on disconnected input."""
    row = bfs_distances(g, v)
    m = max(row)
    if m >= g.n:
        raise ValueError("eccentricity undefined: graph is disconnected")
    return m


def diameter(g: Graph) -> int:
    """Largest finite hop count; returns the sentinel ``g.n`` if disconnected."""
    dm = all_pairs(g)
    best = 0
    for row in dm.rows:
        m = max(row)
        if m >= g.n:
            return g.n
        if m > best:
            best = m
    return best


def serialize_graph6(g: Graph) -> bytes:
    """Standard header-less graph6: size bytes then 6-bit edge groups."""
    n = g.n
    if n > _G6_MAX_N:
        raise ValueError(f"graph6 supports at most {_G6_MAX_N} vertices here")
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes(
            [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
        )
    nb = n * (n - 1) // 2
    mask = g.edge_mask()
    body = bytearray()
    pad = (-nb) % 6
    mask <<= pad
    for shift in range(nb + pad - 6, -1, -6):
        body.append(((mask >> shift) & 63) + 63)
    return head + bytes(body)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 value; raises :class:`Graph6Error` with the bad offset."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    if not data:
        raise Graph6Error("empty graph6 input", 0)
    pos = 0
    if data[0] == 126:
        if len(data) < 4:
            raise Graph6Error("truncated graph6 size header", len(data))
        n = 0
        for pos in range(1, 4):
            b = data[pos]
            if not 63 <= b <= 126:
                raise Graph6Error(f"invalid graph6 byte {b:#04x}", pos)
            n = (n << 6) | (b - 63)
        pos = 4
        if n <= 62:
            raise Graph6Error("long size header used for small n", 0)
        if n > _G6_MAX_N:
            raise Graph6Error(f"graph6 order {n} beyond supported range", 1)
    else:
        b = data[0]
        if not 63 <= b <= 125:
            raise Graph6Error(f"invalid graph6 size byte {b:#04x}", 0)
        n = b - 63
        pos = 1
    if n == 0:
        raise Graph6Error("graph6 order 0 not supported (n >= 1)", 0)
    nb = n * (n - 1) // 2
    nbytes = (nb + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error(
            f"truncated graph6 body: need {nbytes} bytes, got {len(data) - pos}",
            len(data),
        )
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing data after graph6 body", pos + nbytes)
    mask = 0
    for off in range(nbytes):
        b = data[pos + off]
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid graph6 byte {b:#04x}", pos + off)
        mask = (mask << 6) | (b - 63)
    pad = nbytes * 6 - nb
    if mask & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", pos + nbytes - 1)
    return Graph.from_edge_mask(n, mask >> pad)


def to_dot(g: Graph, name: str = "g") -> str:
    """DOT text with node ids equal to vertex indices."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
