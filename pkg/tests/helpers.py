"""Shared graph builders and independent oracles for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from metricdim.graph_core import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def floyd_warshall(g: Graph) -> list[list[int]]:
    """Independent all-pairs oracle; sentinel g.n for unreachable."""
    n = g.n
    inf = n * n + 1
    d = [
        [0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(n)]
        for i in range(n)
    ]
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            di = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return [[x if x < inf else n for x in row] for row in d]


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, rng: random.Random, p: float = 0.4) -> Graph:
    """Random spanning tree plus random extra edges: connected by build."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = {_e(verts[rng.randrange(i)], verts[i]) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(n, edges)


def random_planted_twin_graph(n_max: int, rng: random.Random) -> Graph:
    """Random connected graph with at least one twin class of size >= 3.

    Classes are planted by cloning a vertex: every clone copies its
    neighborhood, and an adjacent-twin class additionally gets all
    class-internal edges (a non-adjacent one gets them removed).
    """
    base_n = rng.randint(3, max(3, n_max - 3))
    edges = set(random_connected_graph(base_n, rng).edges())
    n = base_n
    budget = n_max - base_n
    for _ in range(rng.randint(1, 2)):
        if budget < 2:
            break
        size = rng.randint(3, min(5, budget + 1))
        if size - 1 > budget:
            continue
        v = rng.randrange(n)
        members = [v] + list(range(n, n + size - 1))
        nbrs = [w for w in range(n) if _e(v, w) in edges and w != v]
        for c in members[1:]:
            for w in nbrs:
                if w not in members:
                    edges.add(_e(c, w))
        internal = {_e(a, b) for a, b in combinations(members, 2)}
        if rng.random() < 0.5:
            edges |= internal
        else:
            edges -= internal
        n += size - 1
        budget -= size - 1
    return Graph.from_edges(n, edges)


def _e(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)
