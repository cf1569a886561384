"""Tests for phase timing and structured log records."""

import json
import logging

import pytest

from src.lab.timing import TimingCollector
from src.logging_setup import ContextFormatter, JSONFormatter, get_structured_logger, parse_level


class TestTimingCollector:
    def test_add_charges_phase(self):
        t = TimingCollector()
        t.mark("x")
        t.add("check", "x")
        assert t.check_ms >= 0.0
        assert t.build_ms == 0.0

    def test_merge(self):
        a = TimingCollector(build_ms=1.0, check_ms=2.0)
        a.merge(TimingCollector(build_ms=0.5, generate_ms=4.0))
        assert a.to_dict() == {"phases": {"build": 1.5, "generate": 4.0, "check": 2.0}, "total_ms": 7.5}


class TestStructuredLogging:
    def test_bind_merges_context(self):
        log = get_structured_logger("src.test", lemma_id="commute", datum=None)
        bound = log.bind(phase="check", instance=None)
        assert bound.extra == {"lemma_id": "commute", "phase": "check"}
        assert log.extra == {"lemma_id": "commute"}

    def test_formatter_emits_context(self):
        record = logging.LogRecord("src.test", logging.INFO, __file__, 1, "found %d", (3,), None)
        record.lemma_id = "commute"
        record.instance = {"w": "t[0]"}
        payload = json.loads(JSONFormatter().format(record))
        assert payload["msg"] == "found 3"
        assert payload["level"] == "INFO"
        assert payload["lemma_id"] == "commute"
        assert payload["instance"] == {"w": "t[0]"}
        assert "phase" not in payload

    def test_text_formatter_appends_context(self):
        record = logging.LogRecord("src.test", logging.WARNING, __file__, 1, "cap reached", (), None)
        record.lemma_id = "commute"
        record.phase = "generate"
        line = ContextFormatter().format(record)
        assert line.endswith("cap reached | lemma_id=commute phase=generate")

    @pytest.mark.parametrize("raw,expected", [("debug", logging.DEBUG), (" INFO ", logging.INFO), (30, 30)])
    def test_parse_level(self, raw, expected):
        assert parse_level(raw) == expected

    def test_parse_level_rejects(self):
        with pytest.raises(ValueError, match="unknown log level"):
            parse_level("chatty")

    def test_adapter_passes_extra(self, caplog):
        log = get_structured_logger("src.test", lemma_id="commute").bind(phase="generate")
        with caplog.at_level(logging.INFO, logger="src.test"):
            log.info("hello")
        assert caplog.records[-1].lemma_id == "commute"
        assert caplog.records[-1].phase == "generate"
