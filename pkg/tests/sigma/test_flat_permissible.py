"""Tests for the flat invariant, min z0 and permissible roots."""

from fractions import Fraction

import pytest

from src.affine.element import AffRoot
from src.bruhat.admissible import adm_set
from src.errors import NotAdmissible, NotInOrbit
from src.sigma.flat import flat_invariant, flat_modulus, min_z0
from src.sigma.permissible import TwistedRootAction, permissible, permissible_blind
from tests.conftest import elem, make_sigma


class TestFlat:
    def test_modulus_of_zero(self, a2_id):
        assert flat_modulus(a2_id, (0, 0)) == (0, 2)

    def test_modulus(self, a2_id):
        A, M = flat_modulus(a2_id, (1, 1))
        assert A == 2
        assert M * 1 > 2 * A

    def test_translation_flat_vector(self, a2_id):
        flat = flat_invariant(a2_id, a2_id.group.translation((1, 0)))
        assert flat.N == 1
        assert flat.vec == (Fraction(1), Fraction(0))

    def test_eta_must_be_conjugate(self, a2_id):
        with pytest.raises(NotInOrbit):
            flat_invariant(a2_id, a2_id.group.translation((1, 0)), eta=(1, 1))

    @pytest.mark.parametrize("preset", ["id", "flip"])
    def test_min_z0_makes_flat_dominant(self, preset):
        sigma = make_sigma("A2", preset)
        datum = sigma.datum
        for x in sigma.group.ball(3):
            z0, y = min_z0(sigma, x)
            flat = flat_invariant(sigma, x)
            assert datum.is_dominant(datum.weyl.act(z0, flat.vec))
            assert y == sigma.group.mul(sigma.group.finite(z0), x, sigma.group.invert(sigma.apply(sigma.group.finite(z0))))


class TestPermissible:
    @pytest.mark.parametrize("spec,preset,lam", [("A2", "id", (1, 1)), ("A2", "flip", (1, 1)), ("B2", "id", (0, 1))])
    def test_matches_blind_recomputation(self, spec, preset, lam):
        sigma = make_sigma(spec, preset)
        aset = adm_set(sigma.group, lam)
        for x in aset:
            assert permissible(sigma, x, aset).roots == permissible_blind(sigma, x, aset)

    def test_requires_admissible(self, a2_id):
        aset = adm_set(a2_id.group, (1, 0))
        with pytest.raises(NotAdmissible):
            permissible(a2_id, a2_id.group.translation((2, 2)), aset)

    def test_m_values_positive(self, a2_id):
        aset = adm_set(a2_id.group, (1, 1))
        x = elem(a2_id.group, "t[1,1]")
        result = permissible(a2_id, x, aset)
        assert result.m_map
        assert all(m >= 1 for m in result.m_map.values())
        assert set(result.roots) <= set(result.m_map)

    def test_forward_inverts_backward(self, a2_flip):
        action = TwistedRootAction(a2_flip, elem(a2_flip.group, "t[1,0].s1"))
        for r in range(len(a2_flip.datum.roots)):
            root = AffRoot(r, 2)
            assert action.forward(action.backward(root)) == root
