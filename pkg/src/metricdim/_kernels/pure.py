"""Pure-Python kernel implementations.

Adjacency is passed as bitmask rows (``rows[v]`` has bit ``w`` set iff
``v ~ w``), distances as nested lists with the sentinel ``n`` standing for
"unreachable".  These functions mirror the compiled extension exactly; see
``metricdim._kernels`` for the selection logic.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence


def all_pairs_dists(n: int, rows: Sequence[int]) -> list[list[int]]:
    """BFS hop counts from every source; unreachable entries hold ``n``."""
    full = (1 << n) - 1
    out = []
    for src in range(n):
        dist = [n] * n
        dist[src] = 0
        seen = 1 << src
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                f_low = f & -f
                nxt |= rows[f_low.bit_length() - 1]
                f &= f - 1
            nxt &= full & ~seen
            f = nxt
            while f:
                f_low = f & -f
                dist[f_low.bit_length() - 1] = d
                f &= f - 1
            seen |= nxt
            frontier = nxt
        out.append(dist)
    return out


def first_resolving_subset(
    n: int, dist: Sequence[Sequence[int]], k: int
) -> Optional[tuple[int, ...]]:
    """Lexicographically least k-subset whose distance vectors are all distinct.

    Returns ``None`` when no k-subset resolves.  ``k = 0`` resolves only the
    one-vertex graph.
    """
    if k == 0:
        return () if n == 1 else None
    for combo in combinations(range(n), k):
        seen = set()
        for v in range(n):
            dv = dist[v]
            key = tuple(dv[x] for x in combo)
            if key in seen:
                break
            seen.add(key)
        else:
            return combo
    return None


def canonical_edge_mask(n: int, mask: int) -> int:
    """Minimum upper-triangle edge bit-string over all vertex permutations.

    Bit order is column-major -- pair (i, j) with i < j sits at index
    j*(j-1)//2 + i -- packed most-significant-first, so integer order on
    masks equals lexicographic order on bit-strings.  Branch-and-bound over
    positions: placing the vertex at position p fixes column p (the bits
    pairing p with positions 0..p-1), and any branch whose column exceeds
    the incumbent best is cut.
    """
    if n == 1:
        return 0
    nb = n * (n - 1) // 2
    adj = _adjacency_from_mask(n, mask)

    big = 1 << n  # exceeds any column value (columns have < n bits)
    best_cols = [big] * n
    perm = [0] * n

    def place(p: int, used: int) -> None:
        if p == n:
            return
        cands = []
        for v in range(n):
            if used & (1 << v):
                continue
            av = adj[v]
            col = 0
            for i in range(p):
                col = (col << 1) | ((av >> perm[i]) & 1)
            cands.append((col, v))
        cands.sort()
        for col, v in cands:
            if col > best_cols[p]:
                break
            if col < best_cols[p]:
                best_cols[p] = col
                for q in range(p + 1, n):
                    best_cols[q] = big
            perm[p] = v
            place(p + 1, used | (1 << v))

    best_cols[0] = 0  # position 0 contributes no bits
    place(0, 0)

    out = 0
    for p in range(1, n):
        out = (out << p) | best_cols[p]
    assert out.bit_length() <= nb
    return out


def _adjacency_from_mask(n: int, mask: int) -> list[int]:
    """Expand a column-major MSB-first edge mask into bitmask rows."""
    nb = n * (n - 1) // 2
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> (nb - 1 - idx)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return rows
