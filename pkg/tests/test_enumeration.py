"""Isomorph-reduced enumeration and the verification sweeps."""

import random

import pytest

from metricdim import _kernels
from metricdim.enumeration import (
    BoundsSummary,
    connected_graph_count,
    connected_graphs,
    graph_count,
    verify_bounds,
    verify_characterization,
)
from metricdim.extremal import max_order
from metricdim.graph_core import Graph, diameter, is_connected

# Published counts of graphs on n vertices up to isomorphism (all /
# connected), cross-checking the independent enumeration here.
ALL_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


class TestEnumeration:
    def test_counts_match_published_tables(self):
        for n, want in ALL_GRAPH_COUNTS.items():
            assert graph_count(n) == want
        for n, want in CONNECTED_COUNTS.items():
            assert connected_graph_count(n) == want

    def test_small_streams(self):
        assert [g.n for g in connected_graphs(1)] == [1]
        three = list(connected_graphs(3))
        assert len(three) == 2
        assert sorted(g.edge_count for g in three) == [2, 3]
        assert len(list(connected_graphs(4))) == 6

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            list(connected_graphs(0))
        with pytest.raises(ValueError):
            list(connected_graphs(9))

    def test_all_connected_and_canonical(self):
        for g in connected_graphs(6):
            assert is_connected(g)
            assert _kernels.canonical_edge_mask(g.n, g.edge_mask()) == g.edge_mask()

    def test_no_isomorphic_duplicates_spot_check(self):
        rng = random.Random(4)
        masks = set()
        for g in connected_graphs(6):
            masks.add(g.edge_mask())
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
            assert _kernels.canonical_edge_mask(h.n, h.edge_mask()) == g.edge_mask()
        assert len(masks) == CONNECTED_COUNTS[6]

    def test_deterministic_order_by_edge_count(self):
        counts = [g.edge_count for g in connected_graphs(5)]
        assert counts == sorted(counts)
        assert list(m.edge_mask() for m in connected_graphs(5)) == list(
            m.edge_mask() for m in connected_graphs(5)
        )


class TestVerifyCharacterization:
    def test_nmax_two_is_k2(self):
        (rep,) = list(verify_characterization(2))
        assert rep.n == 2 and rep.D == 1 and rep.beta == 1
        assert rep.verdict.case_label == "D1"
        assert rep.agrees
        assert rep.graph6 == "A_"

    def test_nmax_five_no_disagreements(self):
        reports = list(verify_characterization(5))
        assert len(reports) == sum(CONNECTED_COUNTS[n] for n in range(2, 6))
        assert all(r.agrees for r in reports)

    def test_case_labels_present_at_seven(self):
        labels = {r.verdict.case_label for r in verify_characterization(7)}
        assert {"D1", "D2-P2", "D2-P3"} <= labels
        assert labels & {"1a", "1b", "1c", "1d", "2", "3"}

    def test_identical_across_jobs(self):
        import metricdim.enumeration as en

        en._metrics_cache.clear()
        serial = list(verify_characterization(4, jobs=1))
        en._metrics_cache.clear()
        parallel = list(verify_characterization(4, jobs=2))
        assert serial == parallel

    def test_report_json_shape(self):
        rep = next(iter(verify_characterization(3)))
        d = rep.as_json_dict()
        assert set(d) == {"graph6", "n", "D", "beta", "verdict", "agrees"}
        assert set(d["verdict"]) == {
            "n",
            "D",
            "beta_expected",
            "accepted",
            "case_label",
            "alpha",
        }

    def test_nmax_range(self):
        with pytest.raises(ValueError):
            list(verify_characterization(1))
        with pytest.raises(ValueError):
            list(verify_characterization(9))


@pytest.fixture(scope="module")
def summary() -> BoundsSummary:
    return verify_bounds(6)


class TestVerifyBounds:
    def test_no_violations(self, summary):
        assert summary.violations == ()

    def test_paths_bucket(self, summary):
        row = _row(summary, 1, 3)
        assert (row.min_n, row.max_n, row.count) == (4, 4, 1)
        assert row.min_expected == 4 and row.max_expected == max_order(1, 3) == 4

    def test_diameter_one_bucket(self, summary):
        row = _row(summary, 3, 1)
        assert (row.min_n, row.max_n, row.count) == (4, 4, 1)
        assert row.max_expected == 4

    def test_max_order_attained_for_2_2(self, summary):
        row = _row(summary, 2, 2)
        assert row.max_n == 6 == max_order(2, 2)

    def test_observed_orders_never_below_minimum(self, summary):
        for row in summary.rows:
            assert row.min_n >= row.beta + row.D

    def test_observed_orders_never_above_maximum(self, summary):
        for row in summary.rows:
            assert row.max_n <= row.max_expected


def _row(summary, beta, D):
    for row in summary.rows:
        if (row.beta, row.D) == (beta, D):
            return row
    raise AssertionError(f"no ({beta}, {D}) bucket")
