"""Extremal constructions for fixed metric dimension beta and diameter D.

Two families live here.  The *broom* realizes the minimum order beta + D:
a path on D vertices with beta extra leaves on one endpoint.  The
*lattice graph* realizes the maximum order

    (floor(2D/3) + 1)**beta  +  beta * sum((2i-1)**(beta-1) for i=1..ceil(D/3))

as the king-move graph on an axis-aligned region of Z^beta: a cube block
Q = [A, D]^beta (A = ceil(D/3)) plus, for each axis i and each level
r in [0, A-1], a pyramid layer with coordinate i pinned to r and the rest
ranging over [B-r, B+r] (B = ceil(D/3) + floor(D/3)).  Points are adjacent
when every coordinate differs by at most one, which makes hop distance the
L-infinity distance, so distances to the beta designated basis points read
off the coordinates directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .graph_core import Graph, all_pairs, bfs_distances, diameter
from .metric import resolves

LatticePoint = tuple[int, ...]


@dataclass(frozen=True)
class MaxGraph:
    """Built maximum-order instance: lattice points, graph, basis indices."""

    beta: int
    D: int
    A: int
    B: int
    points: tuple[LatticePoint, ...]
    graph: Graph
    basis: tuple[int, ...]

    def index_of(self, point: LatticePoint) -> int:
        """Vertex index of a lattice point (points are sorted, so bisect)."""
        lo, hi = 0, len(self.points)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.points[mid] < point:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(self.points) or self.points[lo] != point:
            raise KeyError(f"{point} is not a vertex")
        return lo


def build_broom(beta: int, D: int) -> Graph:
    """Path on D vertices plus beta leaves on its last vertex.

    beta + D vertices, diameter D, metric dimension beta; the added leaves
    (indexed last) form a metric basis.
    """
    _check_params(beta, D)
    edges = [(i, i + 1) for i in range(D - 1)]
    edges += [(D - 1, D - 1 + j) for j in range(1, beta + 1)]
    return Graph.from_edges(beta + D, edges)


def max_order(beta: int, D: int) -> int:
    """Largest order of a connected graph with dimension beta, diameter D."""
    _check_params(beta, D)
    a = _ceil_third(D)
    return (2 * D // 3 + 1) ** beta + beta * sum(
        (2 * i - 1) ** (beta - 1) for i in range(1, a + 1)
    )


def build_max_graph(beta: int, D: int) -> MaxGraph:
    """Construct the maximum-order lattice graph and its basis.

    The block sizes are asserted against the closed form (the blocks must
    tile without overlap), each basis point must sit in its own pyramid,
    and BFS distances to the basis must equal coordinates -- so a
    successfully built instance is already verified to be resolved by its
    basis.
    """
    _check_params(beta, D)
    A = _ceil_third(D)
    B = A + D // 3
    points: set[LatticePoint] = set(product(range(A, D + 1), repeat=beta))
    expected = (D - A + 1) ** beta
    for i in range(beta):
        for r in range(A):
            axes: list[Sequence[int]] = [range(B - r, B + r + 1)] * beta
            axes[i] = (r,)
            points.update(product(*axes))
            expected += (2 * r + 1) ** (beta - 1)
    if len(points) != expected:
        raise AssertionError("lattice blocks overlap; construction is broken")

    pts = tuple(sorted(points))
    index = {p: i for i, p in enumerate(pts)}
    offsets = [d for d in product((-1, 0, 1), repeat=beta) if any(d)]
    edges = []
    for i, p in enumerate(pts):
        for d in offsets:
            q = tuple(a + b for a, b in zip(p, d))
            j = index.get(q)
            if j is not None and j > i:
                edges.append((i, j))
    g = Graph.from_edges(len(pts), edges)

    basis = []
    for i in range(beta):
        v = tuple(0 if j == i else B for j in range(beta))
        if v not in index:
            raise AssertionError(f"basis point {v} missing from its pyramid")
        basis.append(index[v])
    for bi, bv in enumerate(basis):
        row = bfs_distances(g, bv)
        for vi, p in enumerate(pts):
            if row[vi] != p[bi]:
                raise AssertionError(
                    f"basis distance law failed at {p} towards axis {bi}"
                )
    return MaxGraph(beta, D, A, B, pts, g, tuple(basis))


def linf_distance(x: LatticePoint, y: LatticePoint) -> int:
    """Max absolute coordinate difference; equals hop distance in the graph."""
    return max(abs(a - b) for a, b in zip(x, y))


def step_toward(x: LatticePoint, y: LatticePoint) -> LatticePoint:
    """Move every unequal coordinate of x one unit toward y.

    The result is again a vertex of the lattice graph, is adjacent to x,
    and its largest coordinate gap to y is one less than x's.
    """
    if x == y:
        raise ValueError("step_toward needs distinct points")
    return tuple(
        a + (1 if b > a else -1 if b < a else 0) for a, b in zip(x, y)
    )


def basis_distances(mg: MaxGraph) -> tuple[tuple[int, ...], ...]:
    """Hop distances from every vertex to each basis vertex, basis order.

    Row v equals the coordinate tuple of point v, hence the basis resolves.
    """
    rows = [bfs_distances(mg.graph, b) for b in mg.basis]
    return tuple(
        tuple(rows[i][v] for i in range(mg.beta)) for v in range(mg.graph.n)
    )


def upper_bound_audit(g: Graph, s: Iterable[int], k: int) -> bool:
    """Check the sphere-counting bound for a resolving set s and radius k.

    Any vertex at distance > k from all of s has all |s| coordinates in
    [k+1, D], so there are at most (D-k)**|s| of them; every sphere
    N_i(v), v in s, i <= k, holds at most (2i+1)**(|s|-1) vertices.  Both
    facts must hold for every valid input -- a False return means an
    implementation bug somewhere, which is exactly what this audit guards.
    """
    dm = all_pairs(g)
    sv = tuple(sorted(set(s)))
    if not resolves(g, dm, sv):
        raise ValueError("upper bound audit needs a resolving set")
    D = diameter(g)
    if not 0 <= k <= D:
        raise ValueError(f"radius k={k} outside [0, {D}]")
    b = len(sv)
    total = 0
    for v in sv:
        row = dm[v]
        for i in range(k + 1):
            cnt = sum(1 for x in range(g.n) if row[x] == i)
            if cnt > (2 * i + 1) ** (b - 1):
                return False
            total += cnt
    return g.n <= (D - k) ** b + total


def _ceil_third(D: int) -> int:
    return -(-D // 3)


def _check_params(beta: int, D: int) -> None:
    if beta < 1 or D < 2:
        raise ValueError(f"need beta >= 1 and D >= 2, got beta={beta}, D={D}")
