"""Resolving predicates, the solver, and the brute-force oracle."""

import random
from itertools import combinations

import pytest

from helpers import (
    complete,
    cycle,
    path,
    petersen,
    random_connected_graph,
    star,
)
from metricdim.extremal import build_broom
from metricdim.graph_core import Graph, all_pairs, diameter
from metricdim.metric import (
    ResolvingSet,
    brute_force_dimension,
    complement_resolves,
    metric_dimension,
    pair_resolved_by,
    resolves,
)
from metricdim.enumeration import connected_graphs
from metricdim.twins import twin_partition


class TestResolves:
    def test_path_leaf_resolves(self):
        g = path(3)
        assert resolves(g, all_pairs(g), {0})

    def test_complete_singleton_fails(self):
        g = complete(3)
        dm = all_pairs(g)
        assert all(not resolves(g, dm, {v}) for v in range(3))

    def test_broom_leaves_are_basis(self):
        g = build_broom(3, 4)
        assert resolves(g, all_pairs(g), {4, 5, 6})

    def test_disconnected_raises(self):
        g = Graph(2, (0, 0))
        with pytest.raises(ValueError):
            resolves(g, all_pairs(g), {0})

    def test_resolving_set_coordinates(self):
        g = path(3)
        rs = ResolvingSet.of(g, all_pairs(g), {0})
        assert rs.coordinates == ((0,), (1,), (2,))
        assert rs.is_resolving


class TestPairResolvedBy:
    def test_middle_fails_on_endpoints(self):
        g = path(3)
        assert not pair_resolved_by(g, all_pairs(g), 0, 2, 1)

    def test_endpoint_resolves_itself(self):
        g = path(3)
        assert pair_resolved_by(g, all_pairs(g), 0, 2, 0)

    def test_twins_never_resolved_by_others(self):
        g = star(4)
        dm = all_pairs(g)
        # leaves 1..4 are pairwise twins
        for u, v in combinations(range(1, 5), 2):
            for x in range(5):
                if x not in (u, v):
                    assert not pair_resolved_by(g, dm, u, v, x)

    def test_index_check(self):
        g = path(3)
        with pytest.raises(ValueError):
            pair_resolved_by(g, all_pairs(g), 0, 1, 9)


class TestComplementResolves:
    def test_empty_set_vacuous(self):
        g = path(4)
        assert complement_resolves(g, all_pairs(g), set())

    def test_internal_path_vertices(self):
        g = path(4)
        assert complement_resolves(g, all_pairs(g), {1, 2})
        # everything but one diametral endpoint: that endpoint resolves alone
        assert complement_resolves(g, all_pairs(g), {1, 2, 3})

    def test_triangle_two_vertices(self):
        g = complete(3)
        assert not complement_resolves(g, all_pairs(g), {0, 1})

    def test_agrees_with_resolves_on_complement_exhaustive(self):
        for n in range(2, 6):
            for g in connected_graphs(n):
                dm = all_pairs(g)
                for bits in range(1 << n):
                    s = {v for v in range(n) if bits >> v & 1}
                    rest = set(range(n)) - s
                    assert complement_resolves(g, dm, s) == resolves(g, dm, rest)

    def test_agrees_with_resolves_sampled(self):
        rng = random.Random(11)
        for n in (6, 7):
            for g in list(connected_graphs(n))[::9]:
                dm = all_pairs(g)
                for _ in range(20):
                    s = {v for v in range(n) if rng.random() < 0.5}
                    assert complement_resolves(g, dm, s) == resolves(
                        g, dm, set(range(n)) - s
                    )


class TestMetricDimension:
    @pytest.mark.parametrize("n", range(2, 8))
    def test_paths_have_dimension_one(self, n):
        assert metric_dimension(path(n)).beta == 1

    @pytest.mark.parametrize("n", range(2, 8))
    def test_complete_graphs(self, n):
        assert metric_dimension(complete(n)).beta == n - 1

    @pytest.mark.parametrize("beta,d", [(1, 3), (2, 2), (2, 4), (3, 4), (4, 3)])
    def test_brooms(self, beta, d):
        assert metric_dimension(build_broom(beta, d)).beta == beta

    def test_cycle_six(self):
        assert metric_dimension(cycle(6)).beta == 2

    def test_k1_is_zero(self):
        assert metric_dimension(Graph(1, (0,))) == metric_dimension(Graph(1, (0,)))
        assert metric_dimension(Graph(1, (0,))).beta == 0
        assert metric_dimension(Graph(1, (0,))).witness == ()

    def test_disconnected_raises(self):
        with pytest.raises(ValueError):
            metric_dimension(Graph(2, (0, 0)))

    def test_witness_resolves_and_is_lex_least(self):
        for n in range(2, 7):
            for g in connected_graphs(n):
                got = metric_dimension(g)
                oracle = brute_force_dimension(g)
                assert got.beta == oracle.beta
                assert got.witness == oracle.witness  # both sweeps are lexicographic
                assert resolves(g, all_pairs(g), got.witness)

    def test_no_smaller_witness_exhaustive(self):
        for n in range(2, 7):
            for g in connected_graphs(n):
                r = metric_dimension(g)
                dm = all_pairs(g)
                if r.beta > 1:
                    for s in combinations(range(n), r.beta - 1):
                        assert not resolves(g, dm, s)

    def test_twin_obligation_of_witness(self):
        for g in (star(5), complete(6), build_broom(3, 3)):
            r = metric_dimension(g)
            witness = set(r.witness)
            for c in twin_partition(g):
                assert len(witness & set(c.members)) >= len(c.members) - 1

    def test_bounds(self):
        for n in range(2, 7):
            for g in connected_graphs(n):
                beta = metric_dimension(g).beta
                assert 1 <= beta <= n - 1
                assert beta <= n - diameter(g)


class TestBruteForceOracle:
    def test_k4(self):
        assert brute_force_dimension(complete(4)).beta == 3

    def test_p2(self):
        assert brute_force_dimension(path(2)).beta == 1

    def test_petersen(self):
        assert brute_force_dimension(petersen()).beta == 3

    def test_cap(self):
        with pytest.raises(ValueError):
            brute_force_dimension(path(17))
        assert brute_force_dimension(path(17), cap=17).beta == 1

    def test_matches_solver_on_random_graphs(self):
        rng = random.Random(23)
        for _ in range(40):
            g = random_connected_graph(rng.randint(4, 12), rng)
            assert metric_dimension(g).beta == brute_force_dimension(g).beta

    def test_witness_is_minimum_on_random_graphs(self):
        from metricdim import _kernels

        rng = random.Random(31)
        for _ in range(30):
            g = random_connected_graph(rng.randint(4, 12), rng)
            r = metric_dimension(g)
            if r.beta == 1:
                continue
            dm = all_pairs(g)
            if g.n <= 10:  # exhaustive below-size sweep
                assert _kernels.first_resolving_subset(g.n, dm.rows, r.beta - 1) is None
            else:
                for _ in range(200):
                    s = rng.sample(range(g.n), r.beta - 1)
                    assert not resolves(g, dm, s)
