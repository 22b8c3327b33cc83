"""Exhaustive isomorph-reduced enumeration of small connected graphs, and
the sweeps that verify the characterization and the order bounds on them.

Graphs on n vertices are generated by extending every (n-1)-vertex graph
with one new vertex in all 2**(n-1) ways and deduplicating by canonical
form -- the minimum adjacency bit-string over all vertex permutations.
The hard cap is n <= 8: canonical minimization is branch-and-bound over
8! permutations at worst, and the full connected count (11117 at n = 8)
is what the verification sweeps are sized for.
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from . import _kernels
from .characterize import CharacterizationVerdict, decide_min_order
from .extremal import max_order
from .graph_core import Graph, diameter, is_connected, serialize_graph6
from .metric import brute_force_dimension

MAX_ENUM_N = 8


@dataclass(frozen=True)
class VerificationReport:
    """Per-graph record of the characterization sweep.

    ``agrees`` is the whole point: the quotient-based verdict must accept
    exactly when the brute-force dimension equals n - D.  Any record with
    ``agrees == False`` is a counterexample artifact.
    """

    graph6: str
    n: int
    D: int
    beta: int
    verdict: CharacterizationVerdict
    agrees: bool

    def as_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "D": self.D,
            "beta": self.beta,
            "verdict": self.verdict.as_json_dict(),
            "agrees": self.agrees,
        }


@dataclass(frozen=True)
class BoundsRow:
    """Observed order range for one (beta, D) bucket vs. the formulas."""

    beta: int
    D: int
    count: int
    min_n: int
    max_n: int
    min_expected: int
    max_expected: int


@dataclass(frozen=True)
class BoundsSummary:
    n_max: int
    rows: tuple[BoundsRow, ...]
    violations: tuple[str, ...]


def graph_count(n: int) -> int:
    """Number of graphs on n vertices up to isomorphism."""
    return len(_graph_masks(n))


def connected_graph_count(n: int) -> int:
    """Number of connected graphs on n vertices up to isomorphism."""
    return len(_connected_masks(n))


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on n vertices exactly once up to isomorphism.

    Ordered by edge count, then by canonical bit-string.  Hard-capped at
    n <= 8.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    for mask in _connected_masks(n):
        yield Graph.from_edge_mask(n, mask)


def verify_characterization(
    n_max: int, jobs: Optional[int] = None
) -> Iterator[VerificationReport]:
    """Sweep every connected graph with 2 <= n <= n_max.

    For each graph: diameter, brute-force metric dimension, quotient-based
    verdict, and the agreement flag tying them together.  Output order is
    deterministic and independent of ``jobs``.
    """
    if not 2 <= n_max <= MAX_ENUM_N:
        raise ValueError(f"verification needs 2 <= n_max <= {MAX_ENUM_N}")
    for n in range(2, n_max + 1):
        for mask, D, beta, accepted, label, alpha in _graph_metrics(n, jobs):
            verdict = CharacterizationVerdict(accepted, label, alpha, n, D)
            g6 = serialize_graph6(Graph.from_edge_mask(n, mask)).decode("ascii")
            agrees = accepted == (beta == n - D)
            yield VerificationReport(g6, n, D, beta, verdict, agrees)


def verify_bounds(n_max: int, jobs: Optional[int] = None) -> BoundsSummary:
    """Group the sweep by (beta, D) and compare observed orders to formulas.

    Checks that every bucket respects min order beta + D and the max-order
    formula (for D = 1 the only graph is complete, so the max is beta + 1),
    and that both extremes are actually attained whenever they fit under
    n_max.
    """
    if not 2 <= n_max <= MAX_ENUM_N:
        raise ValueError(f"verification needs 2 <= n_max <= {MAX_ENUM_N}")
    buckets: dict[tuple[int, int], list[int]] = {}
    for n in range(2, n_max + 1):
        for _mask, D, beta, *_ in _graph_metrics(n, jobs):
            buckets.setdefault((beta, D), []).append(n)

    rows = []
    violations = []
    for (beta, D), ns in sorted(buckets.items()):
        min_expected = beta + D
        max_expected = max_order(beta, D) if D >= 2 else beta + 1
        row = BoundsRow(beta, D, len(ns), min(ns), max(ns), min_expected, max_expected)
        rows.append(row)
        if row.min_n < min_expected:
            violations.append(
                f"(beta={beta}, D={D}): order {row.min_n} below minimum {min_expected}"
            )
        if row.max_n > max_expected:
            violations.append(
                f"(beta={beta}, D={D}): order {row.max_n} above maximum {max_expected}"
            )
    for (beta, D), ns in sorted(buckets.items()):
        if beta + D <= n_max and min(ns) != beta + D:
            violations.append(f"(beta={beta}, D={D}): minimum {beta + D} not attained")
        max_expected = max_order(beta, D) if D >= 2 else beta + 1
        if max_expected <= n_max and max(ns) != max_expected:
            violations.append(
                f"(beta={beta}, D={D}): maximum {max_expected} not attained"
            )
    for beta in range(1, n_max):
        for D in range(1, n_max - beta + 1):
            if (beta, D) not in buckets:
                violations.append(
                    f"(beta={beta}, D={D}): no graph found although "
                    f"beta + D = {beta + D} <= {n_max}"
                )
    return BoundsSummary(n_max, tuple(rows), tuple(violations))


# -- enumeration core ---------------------------------------------------------


@lru_cache(maxsize=None)
def _graph_masks(n: int) -> tuple[int, ...]:
    """Canonical edge masks of all graphs on n vertices up to isomorphism."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    if n == 1:
        return (0,)
    out = set()
    for pm in _graph_masks(n - 1):
        base = pm << (n - 1)
        for ext in range(1 << (n - 1)):
            out.add(_kernels.canonical_edge_mask(n, base | ext))
    return tuple(sorted(out, key=lambda m: (bin(m).count("1"), m)))


@lru_cache(maxsize=None)
def _connected_masks(n: int) -> tuple[int, ...]:
    return tuple(
        m for m in _graph_masks(n) if is_connected(Graph.from_edge_mask(n, m))
    )


# -- shared metric sweep ------------------------------------------------------

_metrics_cache: dict[int, tuple[tuple, ...]] = {}


def _graph_metrics(n: int, jobs: Optional[int]) -> tuple[tuple, ...]:
    """(mask, D, beta, accepted, case_label, alpha) for every connected graph.

    Cached per order; brute-force beta dominates the cost, so the sweep is
    farmed out to worker processes when ``jobs`` allows.
    """
    if n not in _metrics_cache:
        args = [(n, m) for m in _connected_masks(n)]
        _metrics_cache[n] = tuple(_map_ordered(_metric_worker, args, jobs))
    return _metrics_cache[n]


def _metric_worker(arg: tuple[int, int]) -> tuple:
    n, mask = arg
    g = Graph.from_edge_mask(n, mask)
    D = diameter(g)
    beta = brute_force_dimension(g).beta
    v = decide_min_order(g)
    return (mask, D, beta, v.accepted, v.case_label, v.alpha)


def _map_ordered(func, args, jobs: Optional[int]):
    """Order-preserving map, optionally across processes."""
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(args) < 64:
        return [func(a) for a in args]
    chunk = max(1, len(args) // (jobs * 8))
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(func, args, chunksize=chunk)
