"""Tests for the text notation of W~ elements."""

import pytest

from src.affine.notation import format_elem, format_word, parse_elem
from src.errors import DatumMismatch, NotationError
from tests.conftest import make_group


class TestParseElem:
    def test_translation(self, a2):
        assert parse_elem(a2, "t[1,0]") == a2.translation((1, 0))

    def test_translation_then_word(self, a2):
        x = parse_elem(a2, "t[1,0].s1")
        assert x == a2.compose(a2.translation((1, 0)), a2.simple("s1").elem)

    def test_affine_letter(self, a1):
        assert parse_elem(a1, "s0") == a1.simple("s0").elem

    def test_whitespace_tolerated(self, a2):
        assert parse_elem(a2, " t[ 1 , 1 ] . s2 ") == parse_elem(a2, "t[1,1].s2")

    def test_round_trip(self, a2):
        for x in a2.ball(3):
            assert parse_elem(a2, format_elem(x)) == x

    def test_product_components(self):
        g = make_group("A1xA1")
        assert parse_elem(g, "s0_2.s2") == g.compose(g.simple("s0_2").elem, g.simple("s2").elem)

    @pytest.mark.parametrize(
        "text,match",
        [("t[1]", "needs 2 coordinates"), ("s9", "out of range"), ("q1", "cannot parse"), ("", "empty")],
    )
    def test_errors(self, a2, text, match):
        with pytest.raises(NotationError, match=match):
            parse_elem(a2, text)

    def test_bare_s0_ambiguous_for_products(self):
        with pytest.raises(NotationError, match="use s0_"):
            parse_elem(make_group("A1xA1"), "s0")


class TestFormat:
    def test_canonical_form(self, a2):
        assert format_elem(a2.translation((1, -1))) == "t[1,-1]"
        assert format_elem(parse_elem(a2, "t[1,0].s1")) == "t[1,0].s1"

    def test_word(self):
        assert format_word(("s0", "s1")) == "s0.s1"
        assert format_word(()) == "e"

    def test_foreign_element_rejected(self, a1, a2):
        with pytest.raises(DatumMismatch):
            a2.compose(parse_elem(a1, "s1"), a2.identity)
