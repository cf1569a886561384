"""Tests for the extended affine Weyl group: group law, length, Omega and balls."""

import pytest

from src.affine.element import AffRoot
from src.errors import DatumMismatch, NotationError
from tests.conftest import elem, make_group


class TestGroupLaw:
    def test_compose_with_inverse(self, a2):
        for x in a2.ball(3):
            assert a2.compose(x, a2.invert(x)) == a2.identity

    def test_translations_commute(self, a2):
        x, y = a2.translation((1, 0)), a2.translation((0, 1))
        assert a2.compose(x, y) == a2.compose(y, x) == a2.translation((1, 1))

    def test_power(self, a1):
        t = a1.translation((1,))
        assert a1.power(t, 3) == a1.translation((3,))
        assert a1.power(t, -2) == a1.translation((-2,))

    def test_act_on_point(self, a1):
        x = a1.elem((2,), a1.W.simple(0))
        assert a1.act_on_point(x, (1,)) == (1,)

    def test_mixing_data_rejected(self, a1, a2):
        with pytest.raises(DatumMismatch):
            a2.compose(a2.identity, a1.identity)


class TestAffineRoots:
    def test_positivity_convention(self, a1):
        assert a1.is_positive_affroot(AffRoot(0, 1))
        assert not a1.is_positive_affroot(AffRoot(0, 0))
        assert a1.is_positive_affroot(AffRoot(1, 0))
        assert not a1.is_positive_affroot(AffRoot(1, -1))

    def test_affine_reflection_is_involution(self, a2):
        for r in range(a2.datum.n_pos):
            for k in (-1, 0, 2):
                s = a2.affine_reflection(AffRoot(r, k))
                assert a2.compose(s, s) == a2.identity

    def test_affine_reflection_fixes_its_root(self, a2):
        root = AffRoot(2, 1)
        s = a2.affine_reflection(root)
        assert a2.act_on_affroot(s, root) == a2.negate_affroot(root)

    def test_evaluate(self, a1):
        assert a1.evaluate_affroot(AffRoot(0, 1), (1,)) == 0


class TestLength:
    @pytest.mark.parametrize("spec,mu,length", [("A2", (1, 1), 4), ("A1", (2,), 2), ("A2", (1, 0), 2), ("B2", (0, 1), 4)])
    def test_translation_length(self, spec, mu, length):
        g = make_group(spec)
        assert g.length(g.translation(mu)) == length

    def test_length_matches_inversion_count(self, a2):
        for x in a2.ball(3):
            assert a2.length(x) == a2.inversion_count(x)

    def test_simple_reflections_have_length_one(self, a2):
        for s in a2.simple_reflections:
            assert a2.length(s.elem) == 1

    def test_descents_change_length(self, a2):
        for x in a2.ball(3):
            for s in a2.simple_reflections:
                shorter = a2.length(a2.compose(s.elem, x)) < a2.length(x)
                assert a2.is_left_descent(x, s) == shorter


class TestOmega:
    @pytest.mark.parametrize("spec,order", [("A1", 2), ("A2", 3), ("B2", 2), ("D4", 4), ("G2", 1), ("A1xA1", 4)])
    def test_omega_matches_pi1(self, spec, order):
        g = make_group(spec)
        assert len(g.omega) == order == g.pi1.order()
        assert all(g.length(t) == 0 for t in g.omega)

    def test_decompose(self, a2):
        x = a2.translation((1, 0))
        word, omega = a2.decompose(x)
        assert len(word) == a2.length(x)
        assert a2.from_labels(word, omega) == x
        assert a2.is_length_zero(omega)

    def test_in_affine_weyl(self, a2):
        assert a2.in_affine_weyl(a2.translation((1, 1)))
        assert not a2.in_affine_weyl(a2.translation((1, 0)))

    def test_simple_labels(self):
        assert [s.label for s in make_group("A2").simple_reflections] == ["s0", "s1", "s2"]
        assert [s.label for s in make_group("A1xA1").simple_reflections][:2] == ["s0_1", "s0_2"]

    def test_unknown_label(self, a2):
        with pytest.raises(NotationError, match="unknown simple reflection"):
            a2.simple("s7")


class TestBall:
    @pytest.mark.parametrize("radius", [0, 1, 3])
    def test_a1_ball_size(self, a1, radius):
        assert len(a1.ball(radius)) == 2 * (1 + 2 * radius)

    def test_ball_sorted_by_length(self, a2):
        lengths = [a2.length(x) for x in a2.ball(3)]
        assert lengths == sorted(lengths)

    def test_ball_layers_exact(self, a2):
        for level, layer in enumerate(a2.ball_layers(2)):
            assert all(a2.length(x) == level for x in layer)

    def test_w0_translations(self, a2):
        assert len(a2.w0_translations((1, 1))) == 6
        assert elem(a2, "t[1,1]") in a2.w0_translations((1, 1))
