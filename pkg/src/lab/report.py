"""CheckReport and its JSON/text renderings.

The JSON document is deterministic for a fixed config: no timestamps, stable
key order, instances in generation order.  Timing is wall-clock and therefore
only emitted when explicitly requested.
"""

from __future__ import annotations

import io
import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from rich.console import Console
from rich.table import Table

from src import __version__
from src.errors import ConfigParse
from src.lab.config import CheckerConfig
from src.lab.registry import Instance
from src.lab.timing import TimingCollector

SCHEMA = "adlv-report/1"

STATUS_COMPLETE = "complete"
STATUS_BUDGET = "budget_exceeded"


@dataclass
class CheckReport:
    lemma_id: str
    config: CheckerConfig
    instances_checked: int = 0
    counterexamples: list[Instance] = field(default_factory=list)
    errors: list[dict[str, Any]] = field(default_factory=list)
    status: str = STATUS_COMPLETE
    universe_size: int | None = None
    timing: TimingCollector | None = None
    version: str = __version__

    @property
    def vacuous(self) -> bool:
        return self.instances_checked == 0

    @property
    def passed(self) -> bool:
        return not self.counterexamples and not self.errors and self.status == STATUS_COMPLETE

    def to_json(self, include_timing: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "lemma_id": self.lemma_id,
            "status": self.status,
            "instances_checked": self.instances_checked,
            "universe_size": self.universe_size,
            "vacuous": self.vacuous,
            "counterexamples": list(self.counterexamples),
            "errors": list(self.errors),
            "config": self.config.to_json(),
            "version": self.version,
        }
        if include_timing and self.timing is not None:
            out["timing"] = self.timing.to_dict()
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> CheckReport:
        return cls(
            lemma_id=data["lemma_id"],
            config=CheckerConfig.from_dict(data["config"]),
            instances_checked=int(data.get("instances_checked", 0)),
            counterexamples=list(data.get("counterexamples", [])),
            errors=list(data.get("errors", [])),
            status=data.get("status", STATUS_COMPLETE),
            universe_size=data.get("universe_size"),
            version=data.get("version", __version__),
        )


def summarize(reports: Sequence[CheckReport]) -> dict[str, Any]:
    return {
        "reports": len(reports),
        "instances_checked": sum(r.instances_checked for r in reports),
        "counterexamples": sum(len(r.counterexamples) for r in reports),
        "errors": sum(len(r.errors) for r in reports),
        "budget_exceeded": sum(1 for r in reports if r.status == STATUS_BUDGET),
        "vacuous": sum(1 for r in reports if r.vacuous),
    }


def report_document(
    reports: Sequence[CheckReport],
    include_timing: bool = False,
    extra_summary: dict[str, Any] | None = None,
) -> dict[str, Any]:
    summary = summarize(reports)
    if extra_summary:
        summary.update(extra_summary)
    return {
        "schema": SCHEMA,
        "version": __version__,
        "reports": [r.to_json(include_timing) for r in reports],
        "summary": summary,
    }


def emit_json(
    reports: Sequence[CheckReport],
    include_timing: bool = False,
    extra_summary: dict[str, Any] | None = None,
) -> str:
    doc = report_document(reports, include_timing, extra_summary)
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _cell_label(cfg: CheckerConfig) -> str:
    datum = cfg.datum if isinstance(cfg.datum, str) else json.dumps(cfg.datum, sort_keys=True)
    sigma = cfg.sigma if isinstance(cfg.sigma, str) else json.dumps(cfg.sigma, sort_keys=True)
    return f"{datum} / {sigma}"


def report_table(reports: Sequence[CheckReport]) -> Table:
    table = Table(title="Checker reports", show_header=True, header_style="bold")
    table.add_column("Lemma", style="cyan")
    table.add_column("Cell")
    table.add_column("Instances", justify="right")
    table.add_column("Counterexamples", justify="right")
    table.add_column("Status")
    for r in reports:
        if r.counterexamples or r.errors:
            status = "[red]FAIL[/red]"
        elif r.status == STATUS_BUDGET:
            status = "[yellow]BUDGET[/yellow]"
        elif r.vacuous:
            status = "[yellow]VACUOUS[/yellow]"
        else:
            status = "[green]ok[/green]"
        table.add_row(
            r.lemma_id,
            _cell_label(r.config),
            str(r.instances_checked),
            str(len(r.counterexamples) + len(r.errors)),
            status,
        )
    return table


def emit_text(reports: Sequence[CheckReport]) -> str:
    """A fixed-width plain rendering of :func:`report_table` plus the summary line."""
    buf = io.StringIO()
    console = Console(file=buf, width=120, color_system=None, force_terminal=False)
    if reports:
        console.print(report_table(reports))
    summary = summarize(reports)
    console.print(
        f"{summary['reports']} reports, {summary['instances_checked']} instances, "
        f"{summary['counterexamples']} counterexamples, {summary['errors']} errors"
    )
    return buf.getvalue()


def emit(reports: Sequence[CheckReport], fmt: str = "json", include_timing: bool = False) -> str:
    if fmt == "json":
        return emit_json(reports, include_timing)
    if fmt == "text":
        return emit_text(reports)
    raise ValueError(f"unknown report format {fmt!r}")


def load_report_document(text: str) -> list[CheckReport]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigParse(f"report is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise ConfigParse(f"report schema must be {SCHEMA!r}")
    return [CheckReport.from_json(r) for r in doc.get("reports", [])]
