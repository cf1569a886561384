"""Checker-level tests: instance generation conventions, reachable hypotheses and whole-suite sweeps."""

from pathlib import Path

import pytest

from src.lab.config import CheckerConfig, load_suite
from src.lab.context import CheckContext
from src.lab.registry import get_checker, lemma_ids
from src.lab.runner import run_checker, suite_run
from tests.conftest import tiny_config

SUITES = Path(__file__).resolve().parents[2] / "config" / "suites"

ORDER4_A2A2 = {"datum": "A2xA2", "sigma": {"perm": [3, 4, 2, 1]}, "lambdas": [[1, 0, 0, 1]]}
TRIALITY_OMEGA2 = {"datum": "D4", "sigma": "triality", "lambdas": [[0, 1, 0, 0]]}
TRIALITY_OMEGA34 = {"datum": "D4", "sigma": "triality", "lambdas": [[0, 0, 1, 1]]}


def cell_config(lemma_id: str, cell: dict) -> CheckerConfig:
    return CheckerConfig.from_dict({"lemma_id": lemma_id, "instance_cap": 200_000, **cell})


def instances(lemma_id: str, cfg: CheckerConfig) -> list[dict]:
    return list(get_checker(lemma_id).instances(CheckContext(cfg)))


class TestTinySweep:
    @pytest.mark.parametrize("lemma_id", lemma_ids())
    def test_no_counterexamples_on_a1(self, lemma_id):
        report = run_checker(tiny_config(lemma_id))
        assert report.counterexamples == []
        assert report.errors == []

    @pytest.mark.parametrize("lemma_id", ["commute", "flat", "non-empty", "decomposition"])
    def test_twin_is_refuted(self, lemma_id):
        report = run_checker(tiny_config(lemma_id + "!neg"))
        assert report.instances_checked > 0
        assert len(report.counterexamples) == report.instances_checked

    def test_r_dist_on_the_highest_coroot(self):
        report = run_checker(tiny_config("R-dist", datum="A2", lambdas=[[1, 1]]))
        assert report.instances_checked > 0
        assert report.counterexamples == []

    def test_unique_on_basic_b(self):
        report = run_checker(tiny_config("unique", lambdas=[[2]]))
        assert report.instances_checked >= 1
        assert report.counterexamples == []


class TestAntiDominantConventions:
    def test_right_multiplication_needs_mu_minus_coroot(self):
        # only t^{omega} s_alpha lands in Adm(omega); t^{-omega} s_alpha has length 2
        found = instances("anti.1", tiny_config("anti.1", lambdas=[[1]]))
        assert [(i["K"], i["x"]) for i in found] == [([], [1])]
        assert run_checker(tiny_config("anti.1", lambdas=[[1]])).counterexamples == []

    def test_left_multiplication_needs_mu_plus_twisted_coroot(self):
        found = instances("anti.2", tiny_config("anti.2", lambdas=[[1]]))
        assert [(i["K"], i["x"]) for i in found] == [([], [-1])]
        assert run_checker(tiny_config("anti.2", lambdas=[[1]])).counterexamples == []

    def test_right_multiplication_on_a2(self):
        report = run_checker(tiny_config("anti.1", datum="A2", lambdas=[[1, 1]]))
        assert report.instances_checked > 0
        assert report.counterexamples == []

    def test_conjugators_are_finite(self):
        cfg = tiny_config("anti.3", datum="A2", lambdas=[[1, 1]])
        ctx = CheckContext(cfg)
        found = list(get_checker("anti.3").instances(ctx))
        assert found
        for inst in found:
            z = ctx.parse(inst["z"])
            assert all(c == 0 for c in z.mu)
        assert run_checker(cfg).counterexamples == []


class TestOrthUniverse:
    @pytest.mark.parametrize("lemma_id", ["orth.1", "orth.2", "orth.3"])
    def test_k_is_sigma_stable(self, lemma_id):
        cfg = tiny_config(lemma_id, datum="A1xA1", sigma="swap")
        for inst in instances(lemma_id, cfg):
            assert inst["K"] in ([], [0, 1])


class TestSemiCentralizer:
    def test_sweep(self):
        report = run_checker(tiny_config("semi.4"))
        assert report.instances_checked > 0
        assert report.counterexamples == []

    def test_reflection_moving_nu_is_rejected(self):
        ctx = CheckContext(tiny_config("semi.4"))
        assert not get_checker("semi.4").holds(ctx, {"w": "t[2]", "y": "s1"})

    def test_levi_reflection_is_accepted(self):
        ctx = CheckContext(tiny_config("semi.4", datum="A2"))
        assert get_checker("semi.4").holds(ctx, {"w": "t[1,0]", "y": "s2"})


class TestTargetedCells:
    def test_order_four_twist_reaches_long_tails(self):
        cfg = cell_config("type-II.1", ORDER4_A2A2)
        found = instances("type-II.1", cfg)
        assert found
        assert {i["r"] for i in found} == {3}
        assert run_checker(cfg).counterexamples == []

    def test_order_four_twin_is_refuted(self):
        report = run_checker(cell_config("type-II.1!neg", ORDER4_A2A2))
        assert report.counterexamples

    @pytest.mark.slow
    @pytest.mark.parametrize("lemma_id", ["weak.1", "weak.2", "weak.3", "weak.4", "order3d.small"])
    def test_triality_omega2(self, lemma_id):
        report = run_checker(cell_config(lemma_id, TRIALITY_OMEGA2))
        assert report.instances_checked > 0
        assert report.counterexamples == []

    @pytest.mark.slow
    @pytest.mark.parametrize("lemma_id", ["order3d.small", "order3d.large", "order3d.central"])
    def test_triality_omega34(self, lemma_id):
        report = run_checker(cell_config(lemma_id, TRIALITY_OMEGA34))
        assert report.instances_checked > 0
        assert report.counterexamples == []

    @pytest.mark.slow
    def test_weak_block_is_alpha2(self):
        for inst in instances("weak.1", cell_config("weak.1", TRIALITY_OMEGA2)):
            assert inst["K"] == [1]


class TestShippedSuites:
    def test_every_registered_id_is_in_the_default_suite(self):
        suite = load_suite(SUITES / "default.yaml")
        assert sorted(e.lemma_id for e in suite.entries) == sorted(lemma_ids())

    def test_every_twin_is_in_the_mutation_suite(self):
        suite = load_suite(SUITES / "mutation.yaml")
        assert sorted(e.lemma_id for e in suite.entries) == sorted(i + "!neg" for i in lemma_ids())

    @pytest.mark.slow
    def test_default_suite_checks_every_entry(self):
        result = suite_run(load_suite(SUITES / "default.yaml"), threads=1)
        assert result.summary()["entries_vacuous"] == []
        assert result.summary()["entries_failed"] == []

    @pytest.mark.slow
    def test_mutation_suite_refutes_every_twin(self):
        result = suite_run(load_suite(SUITES / "mutation.yaml"), threads=1)
        assert result.summary()["entries_failed"] == []
