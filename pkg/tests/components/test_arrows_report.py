"""Tests for the arrow relations, their bounds and the one-call analysis report."""

import pytest

from src.components.arrows import ArrowEdge, arrows, component_orbit_size, r_bound, strongly_connected
from src.components.leaves import s_plus
from src.components.report import SCHEMA, analyze
from tests.conftest import make_sigma


class TestBounds:
    def test_component_orbit_size(self, a1xa1_swap, a2_flip):
        assert component_orbit_size(a1xa1_swap, 0) == 2
        assert component_orbit_size(a2_flip, 0) == 1

    @pytest.mark.parametrize(
        "spec,preset,gamma,bound",
        [
            ("A2", "id", 0, 0),
            ("A2", "flip", 0, 1),
            ("A2", "flip", 2, 0),
            ("A1xA1", "swap", 0, 1),
        ],
    )
    def test_r_bound(self, spec, preset, gamma, bound):
        assert r_bound(make_sigma(spec, preset), gamma) == bound


class TestStronglyConnected:
    def test_single_node(self):
        assert strongly_connected([(0,)], [])

    def test_one_way_edge(self):
        edges = [ArrowEdge((0,), (1,), 0, 1)]
        assert not strongly_connected([(0,), (1,)], edges)

    def test_cycle(self):
        edges = [ArrowEdge((0,), (1,), 0, 1), ArrowEdge((1,), (0,), 1, 1)]
        assert strongly_connected([(0,), (1,)], edges)

    def test_loops_ignored(self):
        assert not strongly_connected([(0,), (1,)], [ArrowEdge((0,), (0,), 0, 1)])


class TestArrowGraph:
    def test_full_levi_has_no_edges(self, a1_id):
        splus = s_plus(a1_id, (2,), a1_id.group.identity)
        graph = arrows(a1_id, (2,), splus)
        assert graph.edges == ()
        assert graph.connected
        assert graph.symmetric


class TestAnalyze:
    def test_basic_a1(self, a1_id):
        g = a1_id.group
        report = analyze(a1_id, (2,), g.identity)
        assert report.status.irreducible
        assert report.J == frozenset({0})
        assert list(report.leaves) == [(0,)]
        assert report.distinguished == {(0,): g.identity}
        assert report.pi0_order == 2
        assert report.consistency

    def test_json_shape(self, a1_id):
        g = a1_id.group
        data = analyze(a1_id, (2,), g.identity).to_json(g)
        assert data["schema"] == SCHEMA
        assert data["lambda"] == [2]
        assert data["J"] == [0]
        assert data["leaves"][0]["elements"] == [data["b"]]
        assert data["arrows"]["connected"]
        assert data["pi0"]["order"] == 2

    def test_empty_x_carries_status_only(self, a1_id):
        g = a1_id.group
        report = analyze(a1_id, (2,), g.translation((1,)))
        assert not report.status.nonempty
        assert report.leaves == {}
        assert report.pi0 is None
        assert report.consistency
        data = report.to_json(g)
        assert data["arrows"] is None
        assert data["pi0"] is None

    def test_split_a2(self, a2_id):
        report = analyze(a2_id, (1, 1), a2_id.group.identity)
        assert report.pi0_order == 3
        assert report.consistency
        assert report.central_parts is not None
