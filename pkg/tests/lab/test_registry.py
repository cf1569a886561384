"""Tests for the checker registry and negated twins."""

import pytest

from src.errors import UnknownLemma
from src.lab.registry import NEG_SUFFIX, Negated, all_checkers, get_checker, lemma_ids


class TestRegistry:
    def test_every_checker_registered_once(self):
        ids = lemma_ids()
        assert len(ids) == 58
        assert len(set(ids)) == len(ids)

    def test_areas(self):
        assert {c.area for c in all_checkers()} == {"appendix", "conjugation", "flat", "leaves", "levi", "orbits"}
        assert "commute" in lemma_ids("appendix")
        assert "commute" not in lemma_ids("flat")

    def test_checkers_carry_quotes(self):
        assert all(c.quote for c in all_checkers())

    def test_unknown(self):
        with pytest.raises(UnknownLemma, match="no-such-lemma"):
            get_checker("no-such-lemma")

    def test_unknown_negated(self):
        with pytest.raises(UnknownLemma):
            get_checker("no-such-lemma" + NEG_SUFFIX)


class TestNegated:
    def test_twin(self):
        base = get_checker("commute")
        twin = get_checker("commute!neg")
        assert isinstance(twin, Negated)
        assert twin.lemma_id == "commute!neg"
        assert twin.area == base.area
        assert twin.quote.startswith("negation of:")
