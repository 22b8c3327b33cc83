"""Resolving-set predicates and the exact metric dimension solver.

A set S resolves a connected graph when every vertex is uniquely named by
its vector of distances to S (in ascending vertex order).  The metric
dimension is the size of a smallest resolving set; the solver here is
exact and doubles as ground truth for the characterization and extremal
modules.

Two routes are deliberately kept apart: :func:`metric_dimension` starts at
the twin-class lower bound and sweeps k-subsets through the kernel layer,
while :func:`brute_force_dimension` is a plain unpruned sweep with
pairwise vector comparison, used as the independent oracle in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import _kernels
from .graph_core import DistanceMatrix, Graph, all_pairs, is_connected
from .twins import twin_partition

BRUTE_FORCE_CAP = 16


@dataclass(frozen=True)
class ResolvingSet:
    """A candidate set with each vertex's distance vector to it."""

    vertices: tuple[int, ...]
    coordinates: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, g: Graph, dm: DistanceMatrix, s: Iterable[int]) -> "ResolvingSet":
        vs = _checked_subset(g, s)
        coords = tuple(tuple(dm[v][x] for x in vs) for v in range(g.n))
        return cls(vs, coords)

    @property
    def is_resolving(self) -> bool:
        return len(set(self.coordinates)) == len(self.coordinates)


@dataclass(frozen=True)
class MetricBasisResult:
    """Exact metric dimension with one witness basis."""

    beta: int
    witness: tuple[int, ...]


def pair_resolved_by(g: Graph, dm: DistanceMatrix, v: int, w: int, x: int) -> bool:
    """True iff x tells v and w apart by distance."""
    for u in (v, w, x):
        if not 0 <= u < g.n:
            raise ValueError(f"vertex {u} out of range")
    return dm[v][x] != dm[w][x]


def resolves(g: Graph, dm: DistanceMatrix, s: Iterable[int]) -> bool:
    """True iff all n distance vectors restricted to s are pairwise distinct."""
    _require_connected(g, dm)
    vs = _checked_subset(g, s)
    seen = set()
    for v in range(g.n):
        row = dm[v]
        key = tuple(row[x] for x in vs)
        if key in seen:
            return False
        seen.add(key)
    return True


def complement_resolves(g: Graph, dm: DistanceMatrix, s: Iterable[int]) -> bool:
    """Whether every pair inside s is resolved by some vertex outside s.

    Equals ``resolves(g, dm, V \\ s)``: a vertex outside s resolves itself
    against everything, so only pairs within s need an outside witness.
    """
    _require_connected(g, dm)
    vs = _checked_subset(g, s)
    inside = set(vs)
    outside = [x for x in range(g.n) if x not in inside]
    for i, v in enumerate(vs):
        for w in vs[i + 1 :]:
            if not any(dm[v][x] != dm[w][x] for x in outside):
                return False
    return True


def metric_dimension(g: Graph) -> MetricBasisResult:
    """Exact metric dimension with the lexicographically least witness.

    Target sizes start at the twin lower bound: every resolving set misses
    at most one vertex of each twin class (twins are equidistant from all
    other vertices), so k >= sum over classes of (size - 1).  Subset
    enumeration is otherwise plain, with early exit on the first coordinate
    collision; a size n-1 set always resolves, so the sweep terminates.
    """
    if not is_connected(g):
        raise ValueError("metric dimension undefined: graph is disconnected")
    if g.n == 1:
        return MetricBasisResult(0, ())
    dm = all_pairs(g)
    lb = max(1, sum(len(c.members) - 1 for c in twin_partition(g)))
    for k in range(lb, g.n):
        found = _kernels.first_resolving_subset(g.n, dm.rows, k)
        if found is not None:
            return MetricBasisResult(k, tuple(found))
    raise AssertionError("no resolving set found; connected graph invariant broken")


def brute_force_dimension(g: Graph, cap: int = BRUTE_FORCE_CAP) -> MetricBasisResult:
    """Unpruned oracle: sweep all subsets by size in lexicographic order.

    Kept independent of the solver path on purpose -- vector comparison is
    the plain pairwise loop, and no twin bound is used.
    """
    if g.n > cap:
        raise ValueError(f"brute force capped at n <= {cap}, got n = {g.n}")
    if not is_connected(g):
        raise ValueError("metric dimension undefined: graph is disconnected")
    if g.n == 1:
        return MetricBasisResult(0, ())
    dm = all_pairs(g)
    n = g.n
    for k in range(1, n):
        for combo in combinations(range(n), k):
            vecs = [tuple(dm[v][x] for x in combo) for v in range(n)]
            distinct = True
            for i in range(n):
                for j in range(i + 1, n):
                    if vecs[i] == vecs[j]:
                        distinct = False
                        break
                if not distinct:
                    break
            if distinct:
                return MetricBasisResult(k, combo)
    raise AssertionError("no resolving set found; connected graph invariant broken")


def _checked_subset(g: Graph, s: Iterable[int]) -> tuple[int, ...]:
    vs = tuple(sorted(set(s)))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    return vs


def _require_connected(g: Graph, dm: DistanceMatrix) -> None:
    if g.n > 0 and max(dm[0]) >= dm.sentinel:
        raise ValueError("distances undefined: graph is disconnected")
