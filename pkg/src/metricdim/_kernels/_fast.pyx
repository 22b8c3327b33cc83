# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; contracts match ``metricdim._kernels.pure`` exactly.

Inputs sized beyond the fast paths (resolving sweeps with k > 8 or more
than 255 vertices, canonicalization with more than 11 vertices) delegate
to the pure implementation, which handles arbitrary sizes.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

from . import pure as _pure

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_ctzll(unsigned long long)


def all_pairs_dists(int n, rows):
    """BFS hop counts from every source; unreachable entries hold n."""
    cdef int W = (n + 63) >> 6
    cdef u64 *adj = <u64 *> malloc(<size_t> n * W * sizeof(u64))
    cdef u64 *seen = <u64 *> malloc(W * sizeof(u64))
    cdef u64 *frontier = <u64 *> malloc(W * sizeof(u64))
    cdef u64 *nxt = <u64 *> malloc(W * sizeof(u64))
    cdef int *dist = <int *> malloc(n * sizeof(int))
    if adj == NULL or seen == NULL or frontier == NULL or nxt == NULL or dist == NULL:
        raise MemoryError()
    cdef int v, w, src, d, base
    cdef u64 f, fresh
    cdef object row
    try:
        for v in range(n):
            row = rows[v]
            for w in range(W):
                adj[v * W + w] = <u64> ((row >> (w << 6)) & 0xFFFFFFFFFFFFFFFF)
        out = []
        for src in range(n):
            for v in range(n):
                dist[v] = n
            dist[src] = 0
            memset(seen, 0, W * sizeof(u64))
            memset(frontier, 0, W * sizeof(u64))
            seen[src >> 6] |= (<u64> 1) << (src & 63)
            frontier[src >> 6] = seen[src >> 6]
            d = 0
            while True:
                d += 1
                memset(nxt, 0, W * sizeof(u64))
                for w in range(W):
                    f = frontier[w]
                    base = w << 6
                    while f:
                        v = base + __builtin_ctzll(f)
                        f &= f - 1
                        for src_w in range(W):
                            nxt[src_w] |= adj[v * W + src_w]
                fresh = 0
                for w in range(W):
                    nxt[w] &= ~seen[w]
                    seen[w] |= nxt[w]
                    frontier[w] = nxt[w]
                    fresh |= nxt[w]
                    f = nxt[w]
                    base = w << 6
                    while f:
                        v = base + __builtin_ctzll(f)
                        if v < n:
                            dist[v] = d
                        f &= f - 1
                if not fresh:
                    break
            out.append([dist[v] for v in range(n)])
        return out
    finally:
        free(adj)
        free(seen)
        free(frontier)
        free(nxt)
        free(dist)


def first_resolving_subset(int n, dist, int k):
    """Lexicographically least resolving k-subset, or None."""
    if k == 0:
        return () if n == 1 else None
    if k > n:
        return None
    if k > 8 or n > 255:
        return _pure.first_resolving_subset(n, dist, k)

    cdef unsigned char *dm = <unsigned char *> malloc(<size_t> n * n)
    cdef int tbl_bits = 1
    while (1 << tbl_bits) < 2 * n:
        tbl_bits += 1
    cdef int tbl_size = 1 << tbl_bits
    cdef u64 *keys = <u64 *> malloc(tbl_size * sizeof(u64))
    cdef int *stamps = <int *> malloc(tbl_size * sizeof(int))
    if dm == NULL or keys == NULL or stamps == NULL:
        raise MemoryError()
    cdef int c[8]
    cdef int v, w, i, j, ok, stamp
    cdef u64 key, h
    cdef object row
    try:
        for v in range(n):
            row = dist[v]
            for w in range(n):
                dm[v * n + w] = <unsigned char> row[w]
        memset(stamps, 0, tbl_size * sizeof(int))
        stamp = 0
        for i in range(k):
            c[i] = i
        while True:
            stamp += 1
            ok = 1
            for v in range(n):
                key = 0
                for i in range(k):
                    key = (key << 8) | dm[v * n + c[i]]
                h = (key * <u64> 0x9E3779B97F4A7C15) >> (64 - tbl_bits)
                while True:
                    if stamps[h] != stamp:
                        stamps[h] = stamp
                        keys[h] = key
                        break
                    if keys[h] == key:
                        ok = 0
                        break
                    h = (h + 1) & <u64> (tbl_size - 1)
                if not ok:
                    break
            if ok:
                return tuple(c[i] for i in range(k))
            i = k - 1
            while i >= 0 and c[i] == n - k + i:
                i -= 1
            if i < 0:
                return None
            c[i] += 1
            for j in range(i + 1, k):
                c[j] = c[j - 1] + 1
    finally:
        free(dm)
        free(keys)
        free(stamps)


def canonical_edge_mask(int n, mask):
    """Minimum column-major MSB-first edge mask over all permutations."""
    if n == 1:
        return 0
    if n > 11:  # edge mask no longer fits one machine word
        return _pure.canonical_edge_mask(n, mask)
    cdef int nb = n * (n - 1) // 2
    cdef u64 m = <u64> mask
    cdef int adj[11]
    cdef int best_cols[11]
    cdef int perm[11]
    cdef int i, j, idx, p
    for i in range(n):
        adj[i] = 0
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (m >> (nb - 1 - idx)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    for p in range(n):
        best_cols[p] = 1 << n
    best_cols[0] = 0
    _place(0, 0, n, adj, best_cols, perm)
    out = 0
    for p in range(1, n):
        out = (out << p) | best_cols[p]
    return out


cdef void _place(int p, int used, int n, int *adj, int *best_cols, int *perm) noexcept:
    if p == n:
        return
    cdef int cols[11]
    cdef int vs[11]
    cdef int cnt = 0
    cdef int v, i, col, av, key_c, key_v, q
    for v in range(n):
        if used & (1 << v):
            continue
        av = adj[v]
        col = 0
        for i in range(p):
            col = (col << 1) | ((av >> perm[i]) & 1)
        cols[cnt] = col
        vs[cnt] = v
        cnt += 1
    for i in range(1, cnt):  # insertion sort by (col, v)
        key_c = cols[i]
        key_v = vs[i]
        q = i - 1
        while q >= 0 and (cols[q] > key_c or (cols[q] == key_c and vs[q] > key_v)):
            cols[q + 1] = cols[q]
            vs[q + 1] = vs[q]
            q -= 1
        cols[q + 1] = key_c
        vs[q + 1] = key_v
    for i in range(cnt):
        col = cols[i]
        if col > best_cols[p]:
            break
        if col < best_cols[p]:
            best_cols[p] = col
            for q in range(p + 1, n):
                best_cols[q] = 1 << n
        perm[p] = vs[i]
        _place(p + 1, used | (1 << vs[i]), n, adj, best_cols, perm)
