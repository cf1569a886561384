"""Tests for checker config validation, grids and suite files."""

import pytest

from src.errors import ConfigParse
from src.lab.config import CheckerConfig, load_document, load_suite, parse_grid, parse_suite
from tests.conftest import tiny_config


class TestCheckerConfig:
    def test_defaults(self):
        cfg = CheckerConfig("commute")
        assert cfg.datum == "A1"
        assert cfg.mode == "exhaustive"
        assert cfg.congruence

    @pytest.mark.parametrize(
        "data,match",
        [
            ({"lemma_id": ""}, "lemma_id"),
            ({"lemma_id": "x", "mode": "lazy"}, "mode must be one of"),
            ({"lemma_id": "x", "max_height": -1}, "max_height"),
            ({"lemma_id": "x", "length_bound": True}, "length_bound"),
            ({"lemma_id": "x", "instance_cap": 0}, "instance_cap must be positive"),
            ({"lemma_id": "x", "lambdas": [["a"]]}, "lambdas"),
            ({"lemma_id": "x", "colour": "red"}, "unknown checker config keys: colour"),
        ],
    )
    def test_rejects(self, data, match):
        with pytest.raises(ConfigParse, match=match):
            CheckerConfig.from_dict(data)

    def test_not_a_mapping(self):
        with pytest.raises(ConfigParse, match="must be a mapping"):
            CheckerConfig.from_dict(["commute"])

    def test_lambdas_coerced(self):
        cfg = tiny_config("commute", lambdas=[["2"]])
        assert cfg.lambdas == [[2]]

    def test_to_json_drops_sampling_fields_when_exhaustive(self):
        data = tiny_config("commute").to_json()
        assert "seed" not in data
        assert "sample_size" not in data
        sampled = tiny_config("commute", mode="sampled", seed=7).to_json()
        assert sampled["seed"] == 7

    def test_replace_revalidates(self):
        cfg = tiny_config("commute")
        assert cfg.replace(datum="A2").datum == "A2"
        with pytest.raises(ConfigParse):
            cfg.replace(mode="lazy")


class TestGrid:
    def test_parse(self):
        defaults, cells = parse_grid({"defaults": {"max_height": 2}, "cells": [{"datum": "A1"}]})
        assert defaults == {"max_height": 2}
        assert cells == [{"datum": "A1"}]

    def test_cell_needs_datum(self):
        with pytest.raises(ConfigParse, match="cell 0"):
            parse_grid({"cells": [{"sigma": "id"}]})

    def test_not_a_mapping(self):
        with pytest.raises(ConfigParse):
            parse_grid([1, 2])


class TestSuite:
    def test_entries_expand_cells(self):
        suite = parse_suite(
            {
                "name": "smoke",
                "defaults": {"max_height": 2},
                "entries": [
                    {"lemma_id": "commute", "cells": [{"datum": "A1"}, {"datum": "A2"}]},
                    {"lemma_id": "commute!neg", "expect": "counterexamples", "cells": [{"datum": "A1"}]},
                ],
            }
        )
        assert suite.name == "smoke"
        configs = suite.entries[0].configs(suite.defaults)
        assert [c.datum for c in configs] == ["A1", "A2"]
        assert all(c.max_height == 2 for c in configs)
        assert suite.entries[1].expect == "counterexamples"

    def test_empty_document(self):
        assert parse_suite(None).entries == []

    def test_bad_expect(self):
        with pytest.raises(ConfigParse, match="expect must be one of"):
            parse_suite({"entries": [{"lemma_id": "commute", "expect": "maybe", "cells": [{"datum": "A1"}]}]})

    def test_entry_needs_cells(self):
        with pytest.raises(ConfigParse, match="has no cells"):
            parse_suite({"entries": [{"lemma_id": "commute"}]})

    def test_cells_validated_eagerly(self):
        with pytest.raises(ConfigParse, match="unknown checker config keys"):
            parse_suite({"entries": [{"lemma_id": "commute", "cells": [{"datum": "A1", "bogus": 1}]}]})

    def test_grid_reference_relative_to_suite(self, tmp_path):
        (tmp_path / "grid.yaml").write_text("defaults:\n  max_height: 1\ncells:\n  - datum: A1\n  - datum: B2\n")
        (tmp_path / "smoke.yaml").write_text("grid: grid.yaml\nentries:\n  - lemma_id: commute\n")
        suite = load_suite(tmp_path / "smoke.yaml")
        assert suite.name == "smoke"
        assert [c.datum for c in suite.entries[0].configs(suite.defaults)] == ["A1", "B2"]


class TestLoadDocument:
    def test_missing(self, tmp_path):
        with pytest.raises(ConfigParse, match="not found"):
            load_document(tmp_path / "nope.yaml")

    def test_bad_yaml(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("a: [1, 2\n")
        with pytest.raises(ConfigParse, match="cannot parse"):
            load_document(path)

    def test_json(self, tmp_path):
        path = tmp_path / "doc.json"
        path.write_text('{"cells": []}')
        assert load_document(path) == {"cells": []}
