"""Tests for sweeps, replay, thread caps and suite runs."""

import pytest

from src.errors import UnknownLemma
from src.lab.config import parse_suite
from src.lab.report import STATUS_BUDGET, STATUS_COMPLETE
from src.lab.runner import THREADS_ENV, replay, run_checker, run_many, suite_run, thread_cap
from tests.conftest import tiny_config


class TestRunChecker:
    def test_true_statement_passes(self):
        report = run_checker(tiny_config("commute"))
        assert report.status == STATUS_COMPLETE
        assert report.instances_checked > 0
        assert report.counterexamples == []
        assert not report.vacuous
        assert report.passed

    def test_negated_twin_finds_counterexamples(self):
        report = run_checker(tiny_config("commute!neg"))
        assert report.counterexamples
        assert len(report.counterexamples) == report.instances_checked
        assert not report.passed

    def test_instance_cap(self):
        report = run_checker(tiny_config("commute", instance_cap=1))
        assert report.status == STATUS_BUDGET
        assert report.instances_checked == 1
        assert not report.passed

    def test_sampled_mode(self):
        full = run_checker(tiny_config("commute"))
        sampled = run_checker(tiny_config("commute", mode="sampled", sample_size=2, seed=3))
        assert sampled.instances_checked == min(2, full.instances_checked)
        assert sampled.universe_size == full.universe_size

    def test_sampling_is_seeded(self):
        a = run_checker(tiny_config("commute!neg", mode="sampled", sample_size=2, seed=5))
        b = run_checker(tiny_config("commute!neg", mode="sampled", sample_size=2, seed=5))
        assert a.counterexamples == b.counterexamples

    def test_unknown_lemma(self):
        with pytest.raises(UnknownLemma):
            run_checker(tiny_config("no-such-lemma"))

    def test_timing_phases(self):
        report = run_checker(tiny_config("commute"))
        phases = report.timing.to_dict()["phases"]
        assert set(phases) == {"build", "generate", "check"}


class TestReplay:
    def test_replay_reproduces(self):
        report = run_checker(tiny_config("commute!neg"))
        inst, verdict = replay(report, 0)
        assert inst == report.counterexamples[0]
        assert verdict is False

    def test_index_out_of_range(self):
        report = run_checker(tiny_config("commute"))
        with pytest.raises(IndexError):
            replay(report, 0)


class TestThreads:
    def test_env_value(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, "3")
        assert thread_cap() == 3

    def test_floor_is_one(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, "0")
        assert thread_cap() == 1

    def test_garbage_falls_back(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, "lots")
        assert thread_cap() >= 1

    def test_run_many_keeps_order(self, no_pool):
        configs = [tiny_config("commute"), tiny_config("commute!neg")]
        reports = run_many(configs)
        assert [r.lemma_id for r in reports] == ["commute", "commute!neg"]


class TestSuiteRun:
    def _suite(self, expect_neg="counterexamples"):
        return parse_suite(
            {
                "name": "smoke",
                "defaults": {"max_height": 2, "length_bound": 3},
                "entries": [
                    {"lemma_id": "commute", "cells": [{"datum": "A1"}]},
                    {"lemma_id": "commute!neg", "expect": expect_neg, "cells": [{"datum": "A1"}]},
                ],
            }
        )

    def test_expectations_met(self):
        result = suite_run(self._suite(), threads=1)
        assert result.ok
        assert not result.budget_exceeded
        assert result.summary() == {
            "suite": "smoke",
            "entries": 2,
            "entries_failed": [],
            "entries_vacuous": [],
            "ok": True,
        }

    def test_expectation_missed(self):
        result = suite_run(self._suite(expect_neg="pass"), threads=1)
        assert not result.ok
        assert result.summary()["entries_failed"] == ["commute!neg"]
        assert result.entries[1].counterexamples > 0

    def test_pass_entry_without_instances_fails(self):
        # no diagram automorphism of order 3 on A1, so nothing is generated
        suite = parse_suite(
            {
                "name": "empty",
                "defaults": {"max_height": 2, "length_bound": 3},
                "entries": [{"lemma_id": "order3d.small", "cells": [{"datum": "A1"}]}],
            }
        )
        result = suite_run(suite, threads=1)
        entry = result.entries[0]
        assert entry.instances_checked == 0
        assert entry.vacuous
        assert entry.counterexamples == 0
        assert not entry.met
        assert not result.ok
        assert result.summary()["entries_failed"] == ["order3d.small"]
        assert result.summary()["entries_vacuous"] == ["order3d.small"]

    def test_vacuous_twin_is_still_unmet(self):
        suite = parse_suite(
            {
                "name": "empty",
                "defaults": {"max_height": 2, "length_bound": 3},
                "entries": [
                    {"lemma_id": "order3d.small!neg", "expect": "counterexamples", "cells": [{"datum": "A1"}]}
                ],
            }
        )
        result = suite_run(suite, threads=1)
        assert not result.entries[0].met
        assert result.summary()["entries_vacuous"] == ["order3d.small!neg"]
