"""Tests for non-emptiness, Hodge-Newton irreducibility and the pi_0 prediction."""

from fractions import Fraction

import pytest

from src.components.hodge_newton import hn_status
from src.components.pi0 import omega_j_image, pi0_prediction
from src.errors import NotIrreducible


class TestHNStatus:
    def test_basic_b_is_irreducible(self, a1_id):
        status = hn_status(a1_id, (2,), a1_id.group.identity)
        assert status.nonempty
        assert status.irreducible
        assert status.lambda_diamond == (Fraction(2),)
        assert status.defect == (Fraction(1),)

    def test_wrong_kottwitz_class_is_empty(self, a1_id):
        status = hn_status(a1_id, (2,), a1_id.group.translation((1,)))
        assert not status.nonempty
        assert not status.irreducible

    def test_extremal_b_is_reducible(self, a1_id):
        status = hn_status(a1_id, (2,), a1_id.group.translation((2,)))
        assert status.nonempty
        assert not status.irreducible
        assert status.defect == (Fraction(0),)

    def test_central_lambda(self, a1_id):
        status = hn_status(a1_id, (0,), a1_id.group.identity)
        assert status.central
        assert status.nonempty

    def test_to_json_uses_strings(self, a1_id):
        data = hn_status(a1_id, (2,), a1_id.group.identity).to_json()
        assert data["lambda_diamond"] == ["2"]
        assert data["defect"] == ["1"]


class TestPi0:
    def test_a2_split(self, a2_id):
        pred = pi0_prediction(a2_id, (1, 1), a2_id.group.identity)
        assert pred.order == 3
        assert pred.group == (3,)
        assert pred.consistency

    def test_swap_fixed_part(self, a1xa1_swap):
        pred = pi0_prediction(a1xa1_swap, (1, 1), a1xa1_swap.group.identity)
        assert pred.order == 2
        assert pred.consistency

    def test_central_is_discrete(self, a1_id):
        pred = pi0_prediction(a1_id, (0,), a1_id.group.identity)
        assert pred.discrete
        assert pred.order is None

    def test_reducible_rejected(self, a1_id):
        with pytest.raises(NotIrreducible):
            pi0_prediction(a1_id, (2,), a1_id.group.translation((2,)))

    def test_omega_j_image_full_levi(self, a2_id):
        image = omega_j_image(a2_id, frozenset({0, 1}))
        assert image == frozenset(a2_id.group.pi1.fixed_classes(a2_id.simple_perm))

    def test_a1_basic_has_two_components(self, a1_id):
        pred = pi0_prediction(a1_id, (2,), a1_id.group.identity)
        assert pred.order == 2
        assert pred.consistency

    def test_flip_kills_the_center(self, a2_flip):
        pred = pi0_prediction(a2_flip, (1, 1), a2_flip.group.identity)
        assert pred.order == 1
        assert pred.consistency
