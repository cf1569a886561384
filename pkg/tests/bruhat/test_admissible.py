"""Tests for the Bruhat order and admissible sets."""

import pytest

from src.bruhat.admissible import adm_by_ball_filter, adm_set, distinct_test, is_sigma_stable
from src.bruhat.order import BruhatOrder
from src.errors import DatumMismatch, NotAdmissible, NotDominant
from tests.conftest import elem, make_group


class TestBruhatOrder:
    def test_matches_subword_oracle(self, a1):
        order = BruhatOrder(a1)
        ball = a1.ball(3)
        for x in ball:
            for y in ball:
                assert order.leq(x, y) == order.leq_by_subword(x, y)

    def test_reflexive_and_strict(self, a2):
        order = BruhatOrder(a2)
        x = a2.translation((1, 0))
        assert order.leq(x, x)
        assert not order.lt(x, x)

    def test_different_omega_parts_incomparable(self, a2):
        order = BruhatOrder(a2)
        assert not order.leq(a2.omega[1], a2.translation((1, 1)))

    def test_covers_down(self, a2):
        order = BruhatOrder(a2)
        y = a2.translation((1, 1))
        covers = order.covers_down(y)
        assert covers
        for z in covers:
            assert a2.length(z) == a2.length(y) - 1
            assert order.lt(z, y)

    def test_covers_up(self, a1):
        order = BruhatOrder(a1)
        up = order.covers_up(a1.identity, 2)
        assert {a1.length(z) for z in up} == {1}
        assert len(up) == 2

    def test_datum_mismatch(self, a1, a2):
        with pytest.raises(DatumMismatch):
            BruhatOrder(a2).leq(a1.identity, a2.identity)


class TestAdmSet:
    @pytest.mark.parametrize(
        "spec,lam,size",
        [("A1", (1,), 3), ("A1", (2,), 5), ("A2", (1, 0), 7), ("A2", (0, 1), 7), ("A2", (1, 1), 19)],
    )
    def test_sizes(self, spec, lam, size):
        assert len(adm_set(make_group(spec), lam)) == size

    def test_rank_generating_function(self, a1):
        assert adm_set(a1, (2,)).rank_generating_function() == {0: 1, 1: 2, 2: 2}

    def test_maximal_elements(self, a2):
        aset = adm_set(a2, (1, 1))
        assert len(aset.maximal_elements) == 6
        assert all(a2.length(t) == 4 for t in aset.maximal_elements)

    def test_single_eta_class(self, a2):
        aset = adm_set(a2, (1, 0))
        assert {a2.eta(x) for x in aset} == {aset.eta_class}

    def test_agrees_with_ball_filter(self, a2):
        for lam in ((1, 0), (1, 1)):
            assert frozenset(adm_set(a2, lam).elements) == adm_by_ball_filter(a2, lam)

    def test_non_dominant_rejected(self, a2):
        with pytest.raises(NotDominant):
            adm_set(a2, (1, -1))

    def test_membership(self, a2):
        aset = adm_set(a2, (1, 1))
        assert elem(a2, "t[1,1]") in aset
        assert a2.identity in aset
        with pytest.raises(NotAdmissible):
            aset.require(a2.translation((2, 2)))

    def test_boundary_is_outside(self, a1):
        aset = adm_set(a1, (1,))
        assert aset.boundary
        assert all(y not in aset for y in aset.boundary)

    def test_sigma_stable_under_flip(self, a2_flip):
        aset = adm_set(a2_flip.group, (1, 1))
        assert is_sigma_stable(aset, a2_flip.apply)


class TestDistinct:
    def test_translation_is_left_distinct(self, a1):
        aset = adm_set(a1, (1,))
        top = a1.translation((1,))
        for s in a1.simple_reflections:
            result = distinct_test(aset, top, [s], "left")
            assert result == (a1.compose(s.elem, top) not in aset)

    def test_bad_side(self, a1):
        aset = adm_set(a1, (1,))
        with pytest.raises(ValueError, match="side must be"):
            distinct_test(aset, a1.translation((1,)), a1.simple_reflections, "up")
