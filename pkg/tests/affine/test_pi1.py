"""Tests for pi_1(G), its sigma-fixed points and sigma-coinvariants."""

import pytest

from src.affine.pi1 import permute_coweight, sigma_minus_one_rows
from tests.conftest import make_sigma


class TestPi1:
    def test_classes(self, a2):
        pi1 = a2.pi1
        assert pi1.order() == 3
        assert pi1.class_of((1, 1)) == pi1.zero
        assert pi1.class_of((1, 0)) != pi1.zero

    def test_group_law(self, a2):
        pi1 = a2.pi1
        one = pi1.class_of((1, 0))
        assert pi1.multiple(one, 3) == pi1.zero
        assert pi1.add(one, pi1.neg(one)) == pi1.zero

    def test_counted_matches_smith(self, a2):
        assert a2.pi1.counted_invariants() == a2.pi1.invariant_factors() == (3,)

    def test_permute_coweight(self):
        assert permute_coweight((1, 0), (3, 5)) == (5, 3)

    def test_sigma_minus_one_rows(self):
        assert sigma_minus_one_rows((0, 1)) == []
        assert sigma_minus_one_rows((1, 0)) == [[-1, 1], [1, -1]]


class TestSigmaFixedAndCoinvariants:
    @pytest.mark.parametrize(
        "spec,sigma,fixed,coinv",
        [
            ("A1xA1", "swap", (2,), (2,)),
            ("A2", "flip", (), ()),
            ("A2", "id", (3,), (3,)),
            ("D4", "triality", (), ()),
        ],
    )
    def test_invariants(self, spec, sigma, fixed, coinv):
        frob = make_sigma(spec, sigma)
        pi1 = frob.group.pi1
        perm = frob.simple_perm
        assert pi1.fixed_invariants(perm) == fixed
        assert pi1.fixed_invariants_dual(perm) == fixed
        assert pi1.coinvariant_invariants(perm) == coinv

    def test_coinvariant_class_identifies_sigma_images(self, a1xa1_swap):
        pi1 = a1xa1_swap.group.pi1
        perm = a1xa1_swap.simple_perm
        assert pi1.coinvariant_class(perm, (1, 0)) == pi1.coinvariant_class(perm, (0, 1))
        assert pi1.coinvariant_class(perm, (1, 0)) != pi1.coinvariant_class(perm, (0, 0))
