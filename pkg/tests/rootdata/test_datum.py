"""Tests for Cartan data, root systems, coweight orders and datum specs."""

from fractions import Fraction

import pytest

from src.errors import NotACoroot, NotARoot, NotDominant, RankTooLarge, UnsupportedType
from src.rootdata.cartan import cartan_matrix, validate_type, weyl_group_order
from src.rootdata.datum import RootDatum
from src.rootdata.parse import build_root_datum, datum_to_json, parse_datum_spec


class TestCartan:
    def test_a2(self):
        assert cartan_matrix("A", 2) == ((2, -1), (-1, 2))

    def test_b2_short_root_last(self):
        assert cartan_matrix("B", 2) == ((2, -1), (-2, 2))

    @pytest.mark.parametrize(
        "series,rank,order",
        [("A", 3, 24), ("B", 3, 48), ("C", 3, 48), ("D", 4, 192), ("G", 2, 12), ("E", 6, 51840), ("F", 4, 1152)],
    )
    def test_weyl_group_order(self, series, rank, order):
        assert weyl_group_order(series, rank) == order

    def test_rank_convention_rejects_d3(self):
        with pytest.raises(UnsupportedType, match="needs rank"):
            validate_type("D", 3)

    def test_unknown_series(self):
        with pytest.raises(UnsupportedType, match="unknown Dynkin series"):
            validate_type("H", 3)

    def test_nonexistent_exceptional(self):
        with pytest.raises(UnsupportedType, match="does not exist"):
            validate_type("E", 5)


class TestRootSystem:
    @pytest.mark.parametrize(
        "spec,n_pos,weyl",
        [("A1", 1, 2), ("A2", 3, 6), ("B2", 4, 8), ("G2", 6, 12), ("A3", 6, 24), ("D4", 12, 192), ("A1xA1", 2, 4)],
    )
    def test_counts(self, spec, n_pos, weyl):
        datum = build_root_datum(spec)
        assert datum.n_pos == n_pos
        assert len(datum.weyl) == weyl
        assert len(datum.roots) == 2 * n_pos

    def test_positive_roots_sorted_by_height(self):
        datum = build_root_datum("A2")
        assert datum.roots[: datum.n_pos] == ((0, 1), (1, 0), (1, 1))

    def test_simple_coroots_are_cartan_rows(self):
        datum = build_root_datum("B2")
        for i in range(datum.rank):
            assert datum.coroots[datum.simple_root_indices[i]] == datum.cartan[i]

    def test_negate_is_involution(self):
        datum = build_root_datum("B2")
        for r in range(len(datum.roots)):
            assert datum.negate(datum.negate(r)) == r
            assert datum.roots[datum.negate(r)] == tuple(-x for x in datum.roots[r])

    def test_index_of_rejects_non_root(self):
        datum = build_root_datum("A2")
        with pytest.raises(NotARoot):
            datum.index_of((2, 0))

    def test_highest_root_a2(self):
        datum = build_root_datum("A2")
        assert datum.roots[datum.highest_roots[0]] == (1, 1)

    def test_two_rho(self):
        assert build_root_datum("A2").two_rho == (2, 2)

    def test_product_has_one_highest_root_per_component(self):
        datum = build_root_datum("A1xA2")
        assert len(datum.highest_roots) == 2

    def test_rank_too_large(self):
        with pytest.raises(RankTooLarge, match="exceeds"):
            RootDatum([("A", 9)])

    def test_weyl_budget_enforced(self):
        with pytest.raises(RankTooLarge, match="exceeds"):
            RootDatum([("A", 4)], weyl_budget=100)


class TestCoweights:
    def test_dominant_conjugate(self):
        datum = build_root_datum("A2")
        bar, z = datum.dominant_conjugate((-1, 0))
        assert bar == (0, 1)
        assert datum.weyl.act(z, (-1, 0)) == (0, 1)

    def test_dominant_conjugate_of_dominant_is_identity(self):
        datum = build_root_datum("A2")
        bar, z = datum.dominant_conjugate((1, 1))
        assert bar == (1, 1)
        assert z.is_identity

    def test_preceq_with_congruence(self):
        datum = build_root_datum("A1")
        assert datum.preceq((0,), (2,))
        assert not datum.preceq((1,), (2,))
        assert datum.preceq((1,), (2,), congruence=False)

    def test_preceq_uses_dominant_conjugate(self):
        datum = build_root_datum("A1")
        assert datum.preceq((-2,), (2,))
        assert not datum.preceq((4,), (2,))

    def test_saturation_a1(self):
        datum = build_root_datum("A1")
        assert datum.saturation((2,)) == {(2,), (-2,), (0,)}
        assert datum.saturation((2,), congruence=False) == {(c,) for c in range(-2, 3)}

    def test_saturation_a2(self):
        datum = build_root_datum("A2")
        assert len(datum.saturation((1, 1))) == 7

    def test_saturation_rejects_non_dominant(self):
        with pytest.raises(NotDominant):
            build_root_datum("A1").saturation((-1,))

    def test_classify_highest_coroot(self):
        datum = build_root_datum("A2")
        flags = datum.classify_coweight((1, 1), [])
        assert flags.k_dominant and flags.k_antidominant
        assert flags.k_minuscule and flags.strongly_k_minuscule

    def test_classify_relative_to_levi(self):
        datum = build_root_datum("A2")
        flags = datum.classify_coweight((2, -1), [1])
        assert flags.k_antidominant
        assert not flags.k_dominant
        assert flags.strongly_k_minuscule

    def test_classify_requires_coroot(self):
        datum = build_root_datum("A2")
        with pytest.raises(NotACoroot):
            datum.classify_coweight((1, 0), [], require_coroot=True)

    def test_coroot_height(self):
        datum = build_root_datum("A2")
        assert datum.coroot_height((1, 0)) == 1
        assert datum.coroot_height((1, 1)) == 2

    def test_dominant_up_to_height(self):
        datum = build_root_datum("A2")
        assert datum.dominant_up_to_height(1) == [(0, 1), (1, 0)]
        assert (1, 1) in datum.dominant_up_to_height(2)

    def test_stabilizer_simple(self):
        datum = build_root_datum("A2")
        assert datum.stabilizer_simple((1, 0)) == {1}
        with pytest.raises(NotDominant):
            datum.stabilizer_simple((1, -1))

    def test_project_kills_levi_coroots(self):
        datum = build_root_datum("A2")
        assert datum.project({0}, (1, 0)) == (Fraction(0), Fraction(1, 2))

    def test_levi_and_projection_for_coweight(self):
        datum = build_root_datum("A2")
        levi = datum.levi_and_projection((1, 0))
        assert levi.simple == {1}
        assert {datum.roots[r] for r in levi.roots} == {(0, 1), (0, -1)}

    def test_connected_parts(self):
        datum = build_root_datum("A3")
        assert datum.connected_parts({0, 2}) == (frozenset({0}), frozenset({2}))
        assert datum.connected_parts({0, 1}) == (frozenset({0, 1}),)


class TestRootLengths:
    def test_b2_short_simple(self):
        datum = build_root_datum("B2")
        assert datum.is_short_simple(1)
        assert not datum.is_short_simple(0)

    def test_simply_laced(self):
        assert build_root_datum("A2").simply_laced
        assert build_root_datum("D4").simply_laced
        assert not build_root_datum("B2").simply_laced

    def test_g2_long_roots(self):
        datum = build_root_datum("G2")
        assert sum(1 for r in range(datum.n_pos) if datum.is_long_root(r)) == 3


class TestParse:
    def test_product(self):
        assert parse_datum_spec("A1xA1") == (("A", 1), ("A", 1))

    def test_power_and_json_agree(self):
        doc = {"components": [{"type": "A", "rank": 2, "copies": 2}]}
        assert parse_datum_spec("A2^2") == parse_datum_spec(doc) == (("A", 2), ("A", 2))

    def test_inline_json_string(self):
        assert parse_datum_spec('{"components": [{"type": "B", "rank": 2}]}') == (("B", 2),)

    def test_bad_piece(self):
        with pytest.raises(UnsupportedType, match="cannot parse"):
            parse_datum_spec("Q7")

    def test_empty_components(self):
        with pytest.raises(UnsupportedType, match="non-empty"):
            parse_datum_spec({"components": []})

    def test_build_is_cached(self):
        assert build_root_datum("A2") is build_root_datum("A2")

    def test_datum_to_json(self):
        doc = datum_to_json(build_root_datum("A2"))
        assert doc["label"] == "A2"
        assert doc["weyl_order"] == 6
        assert doc["positive_roots"] == [[0, 1], [1, 0], [1, 1]]
        assert doc["cartan"] == [[2, -1], [-1, 2]]
