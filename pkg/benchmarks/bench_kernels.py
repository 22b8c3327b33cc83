#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Workloads mirror where the toolkit actually spends time: all-pairs BFS,
the k-subset resolving sweep inside the solver, and canonical-form
minimization as used by the isomorph-reduced enumeration.

Usage: python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import random
import time

from metricdim._kernels import pure

try:
    from metricdim._kernels import _fast
except ImportError:
    _fast = None


def _random_rows(n, p, seed):
    rng = random.Random(seed)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return tuple(rows)


def bench_all_pairs(impl, reps):
    rows = _random_rows(64, 0.08, seed=1)
    t0 = time.perf_counter()
    for _ in range(reps):
        impl.all_pairs_dists(64, rows)
    return time.perf_counter() - t0


def bench_resolving(impl, reps):
    rows = _random_rows(13, 0.25, seed=2)
    dist = pure.all_pairs_dists(13, rows)
    t0 = time.perf_counter()
    for _ in range(reps):
        for k in (1, 2, 3):
            impl.first_resolving_subset(13, dist, k)
    return time.perf_counter() - t0


def bench_canonical(impl, reps):
    rng = random.Random(3)
    n = 7
    nb = n * (n - 1) // 2
    masks = [rng.randrange(1 << nb) for _ in range(400)]
    t0 = time.perf_counter()
    for _ in range(reps):
        for m in masks:
            impl.canonical_edge_mask(n, m)
    return time.perf_counter() - t0


BENCHMARKS = [
    ("all_pairs_dists (n=64)", bench_all_pairs, 40),
    ("first_resolving_subset (n=13, k<=3)", bench_resolving, 40),
    ("canonical_edge_mask (n=7, 400 masks)", bench_canonical, 10),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="cut repetitions 10x")
    args = ap.parse_args()

    print(f"{'workload':<40} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, fn, reps in BENCHMARKS:
        if args.quick:
            reps = max(1, reps // 10)
        t_pure = fn(pure, reps)
        if _fast is None:
            print(f"{name:<40} {t_pure:>9.3f}s {'missing':>10} {'-':>9}")
            continue
        t_fast = fn(_fast, reps)
        print(
            f"{name:<40} {t_pure:>9.3f}s {t_fast:>9.3f}s {t_pure / t_fast:>8.1f}x"
        )


if __name__ == "__main__":
    main()
