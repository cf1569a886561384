"""Tests for the enumerated finite Weyl group."""

from src.rootdata.parse import build_root_datum


class TestWeylGroup:
    def test_identity_first(self):
        W = build_root_datum("A2").weyl
        assert W.identity.is_identity
        assert W.identity.length == 0

    def test_longest_element(self):
        datum = build_root_datum("A2")
        w0 = datum.weyl.longest()
        assert w0.length == 3
        assert datum.weyl.act(w0, (1, 0)) == (0, -1)

    def test_longest_b2(self):
        assert build_root_datum("B2").weyl.longest().length == 4

    def test_inverse(self):
        W = build_root_datum("B2").weyl
        for w in W:
            assert W.mul(w, W.inv(w)).is_identity

    def test_from_word_matches_reduced_word(self):
        W = build_root_datum("A3").weyl
        for w in W:
            assert W.from_word(w.word) == w

    def test_simple_reflection_acts_by_cartan_row(self):
        datum = build_root_datum("A2")
        assert datum.weyl.act(datum.weyl.simple(0), (1, 0)) == (-1, 1)

    def test_descents(self):
        W = build_root_datum("A2").weyl
        s1 = W.simple(0)
        assert W.is_left_descent(s1, 0)
        assert W.is_right_descent(s1, 0)
        assert not W.is_left_descent(s1, 1)

    def test_parabolic_and_cosets(self):
        W = build_root_datum("A2").weyl
        assert len(W.parabolic({0})) == 2
        assert len(W.min_right_coset_reps({0})) == 3
        assert len(W.min_left_coset_reps({0, 1})) == 1

    def test_orbit(self):
        W = build_root_datum("A2").weyl
        assert W.orbit((1, 0)) == {(1, 0), (-1, 1), (0, -1)}
        assert len(W.orbit((1, 1))) == 6

    def test_support(self):
        W = build_root_datum("A3").weyl
        assert W.support(W.from_word([0, 2])) == {0, 2}
