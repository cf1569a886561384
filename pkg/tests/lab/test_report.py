"""Tests for report rendering and reloading."""

import json

import pytest

from src import __version__
from src.errors import ConfigParse
from src.lab.report import (
    SCHEMA,
    STATUS_BUDGET,
    CheckReport,
    emit,
    emit_json,
    emit_text,
    load_report_document,
    summarize,
)
from src.lab.runner import run_checker
from src.lab.timing import TimingCollector
from tests.conftest import tiny_config


def make_report(**kwargs) -> CheckReport:
    return CheckReport("commute", tiny_config("commute"), **kwargs)


class TestCheckReport:
    def test_vacuous(self):
        report = make_report()
        assert report.vacuous
        assert report.passed

    def test_budget_is_not_a_pass(self):
        assert not make_report(instances_checked=4, status=STATUS_BUDGET).passed

    def test_errors_are_not_a_pass(self):
        report = make_report(instances_checked=1, errors=[{"instance": {}, "error": "X", "message": ""}])
        assert not report.passed

    def test_key_order(self):
        data = make_report(instances_checked=2).to_json()
        assert list(data) == [
            "lemma_id",
            "status",
            "instances_checked",
            "universe_size",
            "vacuous",
            "counterexamples",
            "errors",
            "config",
            "version",
        ]
        assert data["version"] == __version__

    def test_timing_only_on_request(self):
        report = make_report(timing=TimingCollector())
        assert "timing" not in report.to_json()
        assert report.to_json(include_timing=True)["timing"]["total_ms"] == 0.0


class TestDocument:
    def test_json_is_deterministic(self):
        a = emit_json([run_checker(tiny_config("commute!neg"))])
        b = emit_json([run_checker(tiny_config("commute!neg"))])
        assert a == b
        doc = json.loads(a)
        assert doc["schema"] == SCHEMA
        assert doc["summary"]["counterexamples"] == len(doc["reports"][0]["counterexamples"])

    def test_empty(self):
        doc = json.loads(emit_json([]))
        assert doc["reports"] == []
        assert doc["summary"] == summarize([])
        assert doc["summary"]["reports"] == 0

    def test_extra_summary(self):
        doc = json.loads(emit_json([], extra_summary={"ok": True}))
        assert doc["summary"]["ok"] is True

    def test_reload(self):
        original = run_checker(tiny_config("commute!neg"))
        loaded = load_report_document(emit_json([original]))
        assert len(loaded) == 1
        assert loaded[0].lemma_id == "commute!neg"
        assert loaded[0].counterexamples == original.counterexamples
        assert loaded[0].config == original.config

    @pytest.mark.parametrize(
        "text,match",
        [("not json", "not valid JSON"), ('{"schema": "other"}', "schema must be")],
    )
    def test_reload_rejects(self, text, match):
        with pytest.raises(ConfigParse, match=match):
            load_report_document(text)


class TestText:
    def test_table_and_summary(self):
        text = emit_text([make_report(instances_checked=3)])
        assert "commute" in text
        assert "A1 / id" in text
        assert "1 reports, 3 instances, 0 counterexamples, 0 errors" in text

    def test_vacuous_flag(self):
        assert "VACUOUS" in emit_text([make_report()])

    def test_emit_dispatch(self):
        assert emit([], "text").endswith("0 errors\n")
        with pytest.raises(ValueError, match="unknown report format"):
            emit([], "xml")
