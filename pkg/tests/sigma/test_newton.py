"""Tests for Newton points, Kottwitz classes and semi-standard elements."""

from fractions import Fraction

import pytest

from src.sigma.newton import (
    finite_twist_order,
    is_semi_standard,
    is_semi_standard_by_window,
    kappa_levi,
    newton_point,
    sigma_average,
    twisted_power,
)
from tests.conftest import elem, make_sigma


class TestNewtonPoint:
    def test_translation(self, a1_id):
        nk = newton_point(a1_id, a1_id.group.translation((2,)))
        assert nk.nu == (Fraction(2),)
        assert nk.period == 1

    def test_finite_element_is_basic(self, a1_id):
        nk = newton_point(a1_id, elem(a1_id.group, "s1"))
        assert nk.nu == (Fraction(0),)
        assert nk.period == 2

    def test_newton_is_dominant(self, a2_id):
        nk = newton_point(a2_id, a2_id.group.translation((1, -1)))
        assert nk.nu == (Fraction(1), Fraction(-1))
        assert nk.newton == (Fraction(0), Fraction(1))

    def test_twisted_translation(self, a2_flip):
        nk = newton_point(a2_flip, a2_flip.group.translation((1, 0)))
        assert nk.nu == (Fraction(1, 2), Fraction(1, 2))
        assert nk.period == 2

    def test_kottwitz_is_a_class_invariant(self, a2_flip):
        g = a2_flip.group
        x = g.translation((1, 0))
        conj = g.mul(g.simple("s1").elem, x, a2_flip.apply(g.simple("s1").elem))
        assert newton_point(a2_flip, conj).kottwitz == newton_point(a2_flip, x).kottwitz
        assert newton_point(a2_flip, conj).newton == newton_point(a2_flip, x).newton

    def test_kottwitz_separates_classes(self, a2_id):
        g = a2_id.group
        assert newton_point(a2_id, g.translation((1, 0))).kottwitz != newton_point(a2_id, g.identity).kottwitz

    def test_twisted_power_matches_xi(self, a2_flip):
        x = elem(a2_flip.group, "t[1,0].s1")
        nk = newton_point(a2_flip, x)
        assert twisted_power(a2_flip, x, nk.period).mu == nk.xi
        assert finite_twist_order(a2_flip, x) <= nk.period


class TestSemiStandard:
    @pytest.mark.parametrize("mu", [(1, 0), (1, 1), (0, 0)])
    def test_dominant_translations_are_standard(self, a2_id, mu):
        result = is_semi_standard(a2_id, a2_id.group.translation(mu))
        assert result.semi_standard
        assert result.standard

    def test_simple_reflection_not_semi_standard(self, a2_id):
        assert not is_semi_standard(a2_id, elem(a2_id.group, "s1")).semi_standard

    def test_length_zero_elements_are_semi_standard(self, a2_id):
        for tau in a2_id.group.omega:
            assert is_semi_standard(a2_id, tau).semi_standard

    @pytest.mark.parametrize("spec,preset", [("A2", "id"), ("A2", "flip"), ("B2", "id")])
    def test_window_scan_agrees(self, spec, preset):
        sigma = make_sigma(spec, preset)
        for x in sigma.group.ball(3):
            assert is_semi_standard(sigma, x).semi_standard == is_semi_standard_by_window(sigma, x)


class TestAverages:
    def test_sigma_average(self, a2_flip):
        assert sigma_average(a2_flip, (1, 0)) == (Fraction(1, 2), Fraction(1, 2))

    def test_identity_average_is_dominant_conjugate(self, a2_id):
        assert sigma_average(a2_id, (1, 1)) == (Fraction(1), Fraction(1))

    def test_kappa_levi_full_levi_is_pi1_coinvariant(self, a2_id):
        assert kappa_levi(a2_id, {0, 1}, (1, 1)) == kappa_levi(a2_id, {0, 1}, (0, 0))

    def test_kappa_levi_torus_is_faithful(self, a2_id):
        assert kappa_levi(a2_id, set(), (1, 0)) != kappa_levi(a2_id, set(), (0, 0))
