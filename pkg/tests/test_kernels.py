"""Behavioral parity between the pure kernels and the compiled extension."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_graph
from metricdim import _kernels
from metricdim._kernels import pure

fast = pytest.importorskip(
    "metricdim._kernels._fast", reason="compiled extension not built"
)


def mask_strategy(max_n=8):
    return st.integers(2, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1)
        )
    )


class TestSelection:
    def test_active_implementation_reported(self):
        assert _kernels.IMPLEMENTATION in ("compiled", "pure")


class TestAllPairsParity:
    @given(mask_strategy())
    @settings(max_examples=120, deadline=None)
    def test_matches_pure(self, case):
        n, mask = case
        rows = _rows(n, mask)
        assert fast.all_pairs_dists(n, rows) == pure.all_pairs_dists(n, rows)

    def test_large_graph_multiword(self):
        rng = random.Random(1)
        g = random_graph(150, 0.05, rng)
        assert fast.all_pairs_dists(g.n, g.rows) == pure.all_pairs_dists(g.n, g.rows)


class TestResolvingSubsetParity:
    @given(mask_strategy(), st.integers(0, 4))
    @settings(max_examples=120, deadline=None)
    def test_matches_pure(self, case, k):
        n, mask = case
        dist = pure.all_pairs_dists(n, _rows(n, mask))
        assert fast.first_resolving_subset(n, dist, k) == pure.first_resolving_subset(
            n, dist, k
        )

    def test_k_larger_than_n(self):
        dist = pure.all_pairs_dists(2, (2, 1))
        assert fast.first_resolving_subset(2, dist, 5) is None
        assert pure.first_resolving_subset(2, dist, 5) is None

    def test_wide_subsets_delegate(self):
        # k > 8 goes through the pure fallback inside the extension
        rng = random.Random(2)
        g = random_graph(12, 0.9, rng)
        dist = pure.all_pairs_dists(g.n, g.rows)
        assert fast.first_resolving_subset(12, dist, 9) == pure.first_resolving_subset(
            12, dist, 9
        )


class TestCanonicalParity:
    @given(mask_strategy())
    @settings(max_examples=150, deadline=None)
    def test_matches_pure(self, case):
        n, mask = case
        assert fast.canonical_edge_mask(n, mask) == pure.canonical_edge_mask(n, mask)

    @given(mask_strategy(max_n=7), st.randoms(use_true_random=False))
    @settings(max_examples=100, deadline=None)
    def test_invariant_under_permutation(self, case, rnd):
        n, mask = case
        base = _kernels.canonical_edge_mask(n, mask)
        perm = list(range(n))
        rnd.shuffle(perm)
        permuted = _permute_mask(n, mask, perm)
        assert _kernels.canonical_edge_mask(n, permuted) == base

    def test_canonical_is_minimal_fixpoint(self):
        rng = random.Random(3)
        for _ in range(50):
            n = rng.randint(2, 7)
            mask = rng.randrange(1 << (n * (n - 1) // 2))
            canon = _kernels.canonical_edge_mask(n, mask)
            assert canon <= mask
            assert _kernels.canonical_edge_mask(n, canon) == canon

    def test_twelve_vertices_delegates(self):
        # n = 12 exceeds the one-word fast path; both sides must agree
        rng = random.Random(5)
        nb = 12 * 11 // 2
        mask = rng.randrange(1 << nb)
        perm = list(range(12))
        rng.shuffle(perm)
        assert fast.canonical_edge_mask(12, mask) == pure.canonical_edge_mask(
            12, _permute_mask(12, _permute_mask(12, mask, perm), _inverse(perm))
        )


def _rows(n, mask):
    nb = n * (n - 1) // 2
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> (nb - 1 - idx)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return tuple(rows)


def _permute_mask(n, mask, perm):
    rows = _rows(n, mask)
    out = 0
    for j in range(1, n):
        for i in range(j):
            u, v = perm.index(i), perm.index(j)
            out = (out << 1) | ((rows[u] >> v) & 1)
    return out


def _inverse(perm):
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv
