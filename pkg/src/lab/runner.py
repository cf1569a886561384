"""Sweeps: one checker over one grid cell, many cells over a process pool, suites.

A sweep enumerates the checker's hypothesis set, stops at ``instance_cap`` and
tests the conclusion on every instance (or on a seeded sample).  Each cell is
self-contained so cells run in separate processes; results come back in
submission order so the assembled report does not depend on scheduling.
"""

from __future__ import annotations

import logging
import os
import random
import sys
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from tqdm import tqdm

from src.errors import AdlvError, BudgetExceeded
from src.lab.config import CheckerConfig, Suite, SuiteEntry
from src.lab.context import CheckContext
from src.lab.registry import Checker, Instance, get_checker
from src.lab.report import STATUS_BUDGET, CheckReport
from src.lab.timing import TimingCollector
from src.logging_setup import StructuredLogger, get_structured_logger

logger = logging.getLogger(__name__)

THREADS_ENV = "ADLV_THREADS"


def thread_cap() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None or not raw.strip():
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        logger.warning("ignoring non-integer %s=%r", THREADS_ENV, raw)
        return os.cpu_count() or 1
    return max(1, value)


def _datum_label(cfg: CheckerConfig) -> str:
    return cfg.datum if isinstance(cfg.datum, str) else str(cfg.datum)


def _progress(items: Iterable[Instance], enabled: bool, desc: str) -> Iterable[Instance]:
    if not enabled:
        return items
    return tqdm(items, desc=desc, unit="inst", file=sys.stderr, leave=False, disable=not sys.stderr.isatty())


def _timed(items: Iterator[Instance], timing: TimingCollector) -> Iterator[Instance]:
    """Charge the time spent inside the generator to the ``generate`` phase."""
    while True:
        timing.mark("gen")
        try:
            item = next(items)
        except StopIteration:
            timing.add("generate", "gen")
            return
        timing.add("generate", "gen")
        yield item


def run_checker(
    cfg: CheckerConfig,
    progress: bool = False,
    ctx: CheckContext | None = None,
) -> CheckReport:
    """Sweep one checker over one cell.

    Raises ``UnknownLemma`` for an unregistered id.  Budget overruns (the
    instance cap, or a bounded search inside a checker) end the sweep with a
    partial report whose status is ``budget_exceeded``.
    """
    checker = get_checker(cfg.lemma_id)
    log = get_structured_logger(__name__, lemma_id=cfg.lemma_id, datum=_datum_label(cfg))
    timing = TimingCollector()
    report = CheckReport(cfg.lemma_id, cfg, timing=timing)

    timing.mark("build")
    ctx = ctx if ctx is not None else CheckContext(cfg)
    timing.add("build", "build")

    try:
        universe = _collect(checker, ctx, cfg, timing, log)
    except BudgetExceeded as exc:
        log.bind(phase="generate").warning("budget exceeded while enumerating: %s", exc)
        report.status = STATUS_BUDGET
        return report
    if universe.truncated:
        report.status = STATUS_BUDGET
    report.universe_size = len(universe.items)

    chosen = universe.items
    if cfg.mode == "sampled" and len(chosen) > cfg.sample_size:
        rng = random.Random(cfg.seed)
        picked = sorted(rng.sample(range(len(chosen)), cfg.sample_size))
        chosen = [chosen[i] for i in picked]

    for inst in _progress(chosen, progress, cfg.lemma_id):
        timing.mark("check")
        try:
            ok = checker.holds(ctx, inst)
        except BudgetExceeded as exc:
            timing.add("check", "check")
            log.bind(phase="check", instance=inst).warning("budget exceeded: %s", exc)
            report.status = STATUS_BUDGET
            break
        except AdlvError as exc:
            timing.add("check", "check")
            log.bind(phase="check", instance=inst).error("checker raised %s: %s", type(exc).__name__, exc)
            report.errors.append({"instance": inst, "error": type(exc).__name__, "message": str(exc)})
            report.instances_checked += 1
            continue
        timing.add("check", "check")
        report.instances_checked += 1
        if not ok:
            log.bind(phase="check", instance=inst).info("counterexample")
            report.counterexamples.append(inst)

    if report.vacuous:
        log.warning("hypothesis never fired: zero instances checked")
    log.debug(
        "%d instances, %d counterexamples, status=%s",
        report.instances_checked,
        len(report.counterexamples),
        report.status,
    )
    return report


@dataclass
class _Universe:
    items: list[Instance]
    truncated: bool = False


def _collect(
    checker: Checker,
    ctx: CheckContext,
    cfg: CheckerConfig,
    timing: TimingCollector,
    log: StructuredLogger,
) -> _Universe:
    items: list[Instance] = []
    for inst in _timed(iter(checker.instances(ctx)), timing):
        if len(items) >= cfg.instance_cap:
            log.bind(phase="generate").warning("instance cap %d reached, sweep truncated", cfg.instance_cap)
            return _Universe(items, truncated=True)
        items.append(inst)
    return _Universe(items)


def _run_cell(cfg: CheckerConfig) -> CheckReport:
    return run_checker(cfg)


def run_many(configs: Sequence[CheckerConfig], threads: int | None = None, progress: bool = False) -> list[CheckReport]:
    """Run independent cells, in a process pool when more than one worker is allowed."""
    threads = thread_cap() if threads is None else max(1, threads)
    workers = min(threads, len(configs))
    if workers <= 1:
        return [run_checker(cfg, progress=progress) for cfg in configs]
    logger.debug("running %d cells on %d processes", len(configs), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(_run_cell, configs)
        if progress:
            results = tqdm(results, total=len(configs), desc="cells", file=sys.stderr, disable=not sys.stderr.isatty())
        return list(results)


def replay(report: CheckReport, index: int) -> tuple[Instance, bool]:
    """Re-execute counterexample *index* of *report*; returns it with the fresh verdict."""
    if not 0 <= index < len(report.counterexamples):
        raise IndexError(f"report for {report.lemma_id} has {len(report.counterexamples)} counterexamples")
    inst = report.counterexamples[index]
    ctx = CheckContext(report.config)
    checker = get_checker(report.lemma_id)
    return inst, checker.holds(ctx, inst)


# ----------------------------------------------------------------------
# Suites
# ----------------------------------------------------------------------


@dataclass
class EntryResult:
    entry: SuiteEntry
    reports: list[CheckReport]

    @property
    def counterexamples(self) -> int:
        return sum(len(r.counterexamples) for r in self.reports)

    @property
    def errors(self) -> int:
        return sum(len(r.errors) for r in self.reports)

    @property
    def instances_checked(self) -> int:
        return sum(r.instances_checked for r in self.reports)

    @property
    def vacuous(self) -> bool:
        return self.instances_checked == 0

    @property
    def met(self) -> bool:
        """Whether the entry's expectation holds over all its cells.

        A pass-expectation also needs at least one instance over the cells.
        """
        if self.entry.expect == "counterexamples":
            return self.counterexamples > 0
        if self.vacuous:
            return False
        return self.counterexamples == 0 and self.errors == 0 and all(r.passed for r in self.reports)


@dataclass
class SuiteResult:
    suite: Suite
    entries: list[EntryResult] = field(default_factory=list)

    @property
    def reports(self) -> list[CheckReport]:
        return [r for e in self.entries for r in e.reports]

    @property
    def ok(self) -> bool:
        return all(e.met for e in self.entries)

    @property
    def budget_exceeded(self) -> bool:
        return any(r.status == STATUS_BUDGET for r in self.reports)

    def summary(self) -> dict[str, Any]:
        return {
            "suite": self.suite.name,
            "entries": len(self.entries),
            "entries_failed": [e.entry.lemma_id for e in self.entries if not e.met],
            "entries_vacuous": [e.entry.lemma_id for e in self.entries if e.vacuous],
            "ok": self.ok,
        }


def suite_run(suite: Suite, threads: int | None = None, progress: bool = False) -> SuiteResult:
    """Run every entry in declared order; cells of all entries share one pool."""
    per_entry = [entry.configs(suite.defaults) for entry in suite.entries]
    flat = [cfg for cfgs in per_entry for cfg in cfgs]
    logger.info("suite %s: %d entries, %d cells", suite.name, len(suite.entries), len(flat))
    reports = run_many(flat, threads, progress)
    result = SuiteResult(suite)
    pos = 0
    for entry, cfgs in zip(suite.entries, per_entry):
        chunk = reports[pos : pos + len(cfgs)]
        pos += len(cfgs)
        outcome = EntryResult(entry, chunk)
        if not outcome.met:
            reason = " (no instances)" if outcome.vacuous and entry.expect == "pass" else ""
            logger.warning("suite entry %s (expect %s) not met%s", entry.lemma_id, entry.expect, reason)
        result.entries.append(outcome)
    return result
