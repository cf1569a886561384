"""Tests for sigma-conjugation moves, W_K classes and partial conjugation."""

import pytest

from src.errors import BudgetExceeded
from src.sigma.conjugation import (
    MoveKind,
    conj_move,
    conjugacy_class,
    finite_subset,
    is_k_minimal,
    k_minimal_in_class,
    k_minimal_part,
    longest_of,
    move_graph,
    parabolic_subgroup,
    partial_conjugation,
    sigma_conjugate,
    stable_subset,
)
from tests.conftest import elem, make_group, make_sigma


class TestParabolic:
    def test_finite_weyl_group(self, a2):
        assert len(parabolic_subgroup(a2, {"s1", "s2"})) == 6

    def test_budget(self, a2):
        with pytest.raises(BudgetExceeded):
            parabolic_subgroup(a2, {"s1", "s2"}, budget=3)

    def test_finite_subset(self, a1):
        assert finite_subset(a1, ["s1"])
        assert finite_subset(a1, ["s0"])
        assert not finite_subset(a1, ["s0", "s1"])

    def test_finite_subset_per_component(self):
        g = make_group("A1xA1")
        assert finite_subset(g, ["s0_1", "s2"])
        assert not finite_subset(g, ["s0_2", "s2"])

    def test_longest(self, a2):
        assert a2.length(longest_of(a2, {"s0", "s1"})) == 3


class TestKMinimal:
    def test_part_recomposes(self, a2):
        labels = {"s1", "s2"}
        for x in a2.ball(3):
            u, y = k_minimal_part(a2, x, labels)
            assert a2.compose(u, y) == x
            assert is_k_minimal(a2, y, labels)

    def test_descent_is_not_minimal(self, a2):
        assert is_k_minimal(a2, a2.identity, {"s1", "s2"})
        assert not is_k_minimal(a2, elem(a2, "s1"), {"s1"})


class TestConjugacy:
    def test_sigma_conjugate_identity(self, a2_flip):
        x = elem(a2_flip.group, "t[1,0].s2")
        assert sigma_conjugate(a2_flip, a2_flip.group.identity, x) == x

    def test_class_sizes(self, a1_id):
        g = a1_id.group
        assert len(conjugacy_class(a1_id, elem(g, "s1"), {"s1"})) == 1
        assert conjugacy_class(a1_id, g.translation((1,)), {"s1"}) == {g.translation((1,)), g.translation((-1,))}

    def test_arrow_move_never_increases_length(self, a2_id):
        g = a2_id.group
        for x in g.ball(2):
            for s in g.simple_reflections:
                y = conj_move(a2_id, x, s, MoveKind.ARROW)
                if y is not None:
                    assert g.length(y) <= g.length(x)

    def test_halfarrow_requires_descent(self, a2_id):
        g = a2_id.group
        x = elem(g, "s1")
        assert conj_move(a2_id, x, g.simple("s1"), "halfarrow") == x
        assert conj_move(a2_id, x, g.simple("s2"), "halfarrow") is None

    def test_move_graph_stays_in_class(self, a2_id):
        g = a2_id.group
        x = g.translation((1, 0))
        labels = {"s1", "s2"}
        graph = move_graph(a2_id, x, labels, MoveKind.ARROW)
        cls = conjugacy_class(a2_id, x, labels)
        assert set(graph) <= cls

    def test_stable_subset(self, a2_id):
        g = a2_id.group
        assert stable_subset(a2_id, g.identity, {"s1", "s2"}) == {"s1", "s2"}
        assert stable_subset(a2_id, g.translation((1, 0)), {"s1", "s2"}) == {"s2"}


class TestPartialConjugation:
    @pytest.mark.parametrize("preset", ["id", "flip"])
    def test_terminal_form(self, preset):
        sigma = make_sigma("A2", preset)
        g = sigma.group
        labels = frozenset({"s1", "s2"})
        for x in g.ball(3):
            result = partial_conjugation(sigma, x, labels)
            assert g.compose(result.u, result.x) == result.end
            assert is_k_minimal(g, result.x, labels)
            assert result.stable_subset <= labels
            assert result.end in conjugacy_class(sigma, x, labels)

    def test_trace_is_chain_of_moves(self, a2_id):
        g = a2_id.group
        x = elem(g, "t[1,0].s1")
        result = partial_conjugation(a2_id, x, {"s1", "s2"})
        cur = x
        for move in result.trace:
            assert move.before == cur
            cur = move.after
        assert cur == result.end

    def test_k_minimal_in_class(self, a1_id):
        g = a1_id.group
        mins = k_minimal_in_class(a1_id, g.translation((1,)), {"s1"})
        assert mins == [g.translation((1,))]
