"""adlv CLI: root data, admissible sets, Newton points, component analysis and the checker lab."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import typer
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from src.errors import AdlvError, BudgetExceeded, ConfigParse

app = typer.Typer(
    name="adlv",
    help="Connected components of affine Deligne-Lusztig varieties: combinatorics and lemma checks.",
    no_args_is_help=True,
)


@app.callback()
def _global_options(
    log_json: bool = typer.Option(False, "--log-json", help="Emit structured JSON log lines to stderr"),
    log_level: str | None = typer.Option(None, "--log-level", help="Log level for the src loggers, e.g. DEBUG"),
) -> None:
    """Global options applied before every command."""
    if log_json or log_level:
        from src.logging_setup import setup_logging

        try:
            setup_logging(level=log_level or logging.DEBUG, json_mode=log_json, logger_names=["src"])
        except ValueError as err:
            raise typer.BadParameter(str(err), param_hint="--log-level") from err


console = Console()
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3

REPORT_FORMATS = ("json", "text")


# ---------------------------------------------------------------------------
# Parse helpers
# ---------------------------------------------------------------------------


def parse_vector(raw: str) -> tuple[int, ...]:
    """Parse "1,0,-1" into a coweight in fundamental-coweight coordinates."""
    parts = [p.strip() for p in raw.split(",") if p.strip()]
    if not parts:
        raise typer.BadParameter(f"empty coweight '{raw}'")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as err:
        raise typer.BadParameter(f"coweight entries must be integers, got '{raw}'") from err


def parse_spec(raw: str) -> Any:
    """A datum or Frobenius spec: a preset string, inline JSON, or a path to a JSON/YAML file."""
    from src.lab.config import load_document

    text = raw.strip()
    if text.startswith(("{", "[")):
        try:
            return json.loads(text)
        except json.JSONDecodeError as err:
            raise ConfigParse(f"cannot parse inline JSON spec: {err}") from err
    path = Path(text)
    if path.suffix in (".json", ".yaml", ".yml") or path.exists():
        return load_document(path)
    return text


def _bail(err: AdlvError) -> typer.Exit:
    if isinstance(err, BudgetExceeded):
        console.print(f"[yellow]Budget exceeded: {err}[/yellow]")
        return typer.Exit(EXIT_BUDGET)
    console.print(f"[red]{type(err).__name__}: {err}[/red]")
    return typer.Exit(EXIT_BAD_INPUT)


def _print_json(doc: Any) -> None:
    console.print(json.dumps(doc, indent=2, ensure_ascii=False), markup=False, highlight=False, soft_wrap=True)


def _context(type_spec: str, sigma_spec: str):
    from src.affine.group import affine_group
    from src.rootdata.parse import build_root_datum
    from src.sigma.frobenius import make_frobenius

    datum = build_root_datum(parse_spec(type_spec))
    group = affine_group(datum)
    return group, make_frobenius(group, parse_spec(sigma_spec))


def _make_table(title: str) -> Table:
    return Table(title=title, show_header=True, header_style="bold")


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _render_datum(doc: dict[str, Any], sigma: dict[str, Any] | None) -> None:
    header = Text()
    header.append(f"Type:   {doc['label']}", style="bold")
    header.append(f"\nRank:   {doc['rank']}")
    header.append(f"\n|W0|:   {doc['weyl_order']}")
    header.append(f"\n|Φ+|:   {len(doc['positive_roots'])}")
    if sigma is not None:
        header.append(f"\nσ:      {sigma['name']} (order {sigma['order']}, perm {sigma['perm']})")
    console.print(Panel(header, title="Root datum", border_style="blue"))

    table = _make_table("Cartan matrix")
    for j in range(doc["rank"]):
        table.add_column(f"s{j + 1}", justify="right")
    for row in doc["cartan"]:
        table.add_row(*(str(c) for c in row))
    console.print(table)

    roots = _make_table("Positive roots")
    roots.add_column("#", justify="right")
    roots.add_column("α (simple coords)")
    roots.add_column("α∨ (fundamental coweights)")
    for i, (a, c) in enumerate(zip(doc["positive_roots"], doc["positive_coroots"])):
        roots.add_row(str(i), str(a), str(c))
    console.print(roots)


def _render_components(doc: dict[str, Any]) -> None:
    status = doc["status"]
    header = Text()
    header.append(f"λ:          {doc['lambda']}", style="bold")
    header.append(f"\nb:          {doc['b']}")
    header.append(f"\nnonempty:   {status['nonempty']}")
    header.append(f"\nirreducible: {status['irreducible']}")
    if status["central"]:
        header.append("\ncentral λ:  discrete fiber")
    if doc["b_normalized"] is not None:
        header.append(f"\nJ:          {[j + 1 for j in doc['J']]}")
        header.append(f"\nb in M_J:   {doc['b_normalized']}")
    pi0 = doc.get("pi0")
    if pi0:
        header.append(f"\n|π0| pred.: {pi0['order']} (consistent: {pi0['consistency']})")
    console.print(Panel(header, title="Component analysis", border_style="blue"))
    if not status["nonempty"]:
        return

    leaves = _make_table("Leaves")
    leaves.add_column("x ∈ 𝒮⁺", style="cyan")
    leaves.add_column("|leaf|", justify="right")
    leaves.add_column("distinguished")
    for leaf in doc["leaves"]:
        leaves.add_row(str(leaf["x"]), str(len(leaf["elements"])), ", ".join(leaf["distinguished"]) or "-")
    for x in doc["empty_leaves"]:
        leaves.add_row(str(x), "0", "[yellow]empty[/yellow]")
    console.print(leaves)

    arrows = doc.get("arrows")
    if arrows is not None:
        console.print(
            f"arrows: {len(arrows['edges'])} edges, {len(arrows['tail_edges'])} tail edges, "
            f"connected={arrows['connected']}, symmetric={arrows['symmetric']}"
        )
    console.print(f"decomposition matches full scan: {doc['decomposition']}")


def _render_lemmas(rows: list[tuple[str, str, str]]) -> None:
    table = _make_table("Registered checkers")
    table.add_column("Area", style="cyan")
    table.add_column("Lemma id")
    table.add_column("Quote anchor")
    for area, lemma_id, quote in rows:
        table.add_row(area, lemma_id, quote)
    console.print(table)


def _require_format(fmt: str) -> None:
    if fmt not in REPORT_FORMATS:
        raise typer.BadParameter(f"--format must be one of {', '.join(REPORT_FORMATS)}")


def _emit_reports(reports, fmt: str, output: Path | None, timing: bool, extra_summary: dict | None = None) -> None:
    from src.lab.report import emit_json, emit_text

    text = emit_json(reports, timing, extra_summary) if fmt == "json" else emit_text(reports)
    if output is not None:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text, encoding="utf-8")
        console.print(f"[dim]report written to {output}[/dim]")
        return
    console.print(text.rstrip("\n"), markup=False, highlight=False, soft_wrap=True)


def _render_timing(reports) -> None:
    table = _make_table("Timing Breakdown")
    table.add_column("Lemma", style="cyan")
    for phase in ("build", "generate", "check"):
        table.add_column(f"{phase} (ms)", justify="right")
    for r in reports:
        if r.timing is None:
            continue
        phases = r.timing.to_dict()["phases"]
        table.add_row(r.lemma_id, *(f"{phases[p]:.1f}" for p in ("build", "generate", "check")))
    console.print(table)


def _exit_code_for(reports, ok: bool) -> int:
    from src.lab.report import STATUS_BUDGET

    if not ok:
        if any(r.status == STATUS_BUDGET for r in reports) and not any(r.counterexamples or r.errors for r in reports):
            return EXIT_BUDGET
        return EXIT_FAILED
    return EXIT_OK


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


@app.command()
def datum(
    spec: str = typer.Argument(..., help='Datum spec: "A2", "A1xA1", inline JSON or a JSON/YAML file'),
    sigma: str | None = typer.Option(None, "--sigma", help="Frobenius preset or JSON spec to describe"),
    json_output: bool = typer.Option(False, "--json", help="Output as machine-readable JSON"),
):
    """Describe a root datum."""
    from src.rootdata.parse import datum_to_json

    try:
        group, frob = _context(spec, sigma or "id")
    except AdlvError as err:
        raise _bail(err) from err
    doc = datum_to_json(group.datum)
    sigma_doc = frob.to_json() if sigma is not None else None
    if json_output:
        if sigma_doc is not None:
            doc["sigma"] = sigma_doc
        _print_json(doc)
    else:
        _render_datum(doc, sigma_doc)
    raise typer.Exit(EXIT_OK)


@app.command()
def adm(
    type_spec: str = typer.Option(..., "--type", help='Datum spec, e.g. "A2"'),
    lam: str = typer.Option(..., "--lambda", help="Dominant coweight, e.g. 1,1"),
    list_elements: bool = typer.Option(False, "--list", help="List every element of Adm(λ)"),
    json_output: bool = typer.Option(False, "--json", help="Output as machine-readable JSON"),
):
    """Enumerate the admissible set Adm(λ)."""
    from src.affine.notation import format_elem
    from src.bruhat.admissible import adm_set
    from src.bruhat.order import elem_sort_key

    vec = parse_vector(lam)
    try:
        group, _ = _context(type_spec, "id")
        aset = adm_set(group, vec)
    except AdlvError as err:
        raise _bail(err) from err
    ordered = sorted(aset.elements, key=lambda y: elem_sort_key(group, y))
    doc = {
        "lambda": list(aset.lam),
        "size": len(aset),
        "rank_generating_function": {str(k): v for k, v in aset.rank_generating_function().items()},
        "maximal": [format_elem(y) for y in aset.maximal_elements],
    }
    if list_elements:
        doc["elements"] = [format_elem(y) for y in ordered]
    if json_output:
        _print_json(doc)
        raise typer.Exit(EXIT_OK)

    table = _make_table(f"Adm({', '.join(map(str, aset.lam))}) in {group.datum.label}")
    table.add_column("length", justify="right", style="cyan")
    table.add_column("count", justify="right")
    for length, count in aset.rank_generating_function().items():
        table.add_row(str(length), str(count))
    table.add_row("[bold]total[/bold]", f"[bold]{len(aset)}[/bold]")
    console.print(table)
    if list_elements:
        for y in ordered:
            console.print(format_elem(y), markup=False, highlight=False)
    raise typer.Exit(EXIT_OK)


@app.command()
def newton(
    elem: str = typer.Option(..., "--elem", help='Element, e.g. "t[1,0].s1"'),
    type_spec: str = typer.Option("A2", "--type", help="Datum spec"),
    sigma: str = typer.Option("id", "--sigma", help="Frobenius preset or JSON spec"),
    json_output: bool = typer.Option(False, "--json", help="Output as machine-readable JSON"),
):
    """Newton point, Kottwitz class and semi-standardness of an element."""
    from src.affine.notation import parse_elem
    from src.sigma.newton import is_semi_standard, newton_point

    try:
        group, frob = _context(type_spec, sigma)
        x = parse_elem(group, elem)
        nk = newton_point(frob, x)
        semi = is_semi_standard(frob, x)
    except AdlvError as err:
        raise _bail(err) from err
    doc = {
        "elem": elem,
        "sigma": frob.name,
        "nu": [str(c) for c in nk.nu],
        "newton": [str(c) for c in nk.newton],
        "kottwitz": list(nk.kottwitz),
        "period": nk.period,
        "length": group.length(x),
        "semi_standard": semi.semi_standard,
        "standard": semi.standard,
    }
    if json_output:
        _print_json(doc)
        raise typer.Exit(EXIT_OK)
    table = _make_table(f"{elem} with σ = {frob.name}")
    table.add_column("invariant", style="cyan")
    table.add_column("value")
    for key, value in doc.items():
        if key not in ("elem", "sigma"):
            table.add_row(key, str(value))
    console.print(table)
    raise typer.Exit(EXIT_OK)


@app.command()
def components(
    type_spec: str = typer.Option(..., "--type", help="Datum spec"),
    lam: str = typer.Option(..., "--lambda", help="Dominant coweight"),
    b: str = typer.Option(..., "--b", help='Representative of [b], e.g. "t[1,0,0]"'),
    sigma: str = typer.Option("id", "--sigma", help="Frobenius preset or JSON spec"),
    congruence: bool = typer.Option(True, "--congruence/--no-congruence", help="Include the coroot congruence in ⪯"),
    json_output: bool = typer.Option(False, "--json", help="Output as machine-readable JSON"),
):
    """Analyze X(λ, b): J, 𝒮⁺, leaves, arrows, orbit types and the π0 prediction."""
    from src.affine.notation import parse_elem
    from src.components.report import analyze

    vec = parse_vector(lam)
    try:
        group, frob = _context(type_spec, sigma)
        report = analyze(frob, vec, parse_elem(group, b), congruence=congruence)
    except AdlvError as err:
        raise _bail(err) from err
    doc = report.to_json(group)
    if json_output:
        _print_json(doc)
    else:
        _render_components(doc)
    raise typer.Exit(EXIT_OK if report.consistency else EXIT_FAILED)


@app.command()
def lemmas(area: str | None = typer.Option(None, "--area", help="Only this area (appendix, conjugation, flat, ...)")):
    """List registered checker ids with their quote anchors."""
    from src.lab.registry import all_checkers

    rows = [(c.area, c.lemma_id, c.quote) for c in all_checkers() if area is None or c.area == area]
    if not rows:
        console.print("[dim]No checkers found.[/dim]")
        raise typer.Exit(EXIT_OK)
    _render_lemmas(rows)
    raise typer.Exit(EXIT_OK)


@app.command()
def check(
    lemma_id: str = typer.Argument(..., help="Checker id; append !neg for the mutated twin"),
    type_spec: str = typer.Option("A1", "--type", help="Datum spec"),
    sigma: str = typer.Option("id", "--sigma", help="Frobenius preset or JSON spec"),
    lambdas: list[str] | None = typer.Option(None, "--lambda", help="Coweight to sweep (repeatable)"),
    grid: Path | None = typer.Option(None, "--grid", help="Sweep every cell of a grid file instead"),
    max_height: int | None = typer.Option(None, "--max-height", help="Bound on the coroot height of λ"),
    length_bound: int | None = typer.Option(None, "--length-bound", help="Length bound for element balls"),
    instance_cap: int | None = typer.Option(None, "--instance-cap", help="Stop after this many instances"),
    mode: str | None = typer.Option(None, "--mode", help="exhaustive or sampled"),
    seed: int | None = typer.Option(None, "--seed", help="Seed for sampled sweeps"),
    sample_size: int | None = typer.Option(None, "--sample-size", help="Instances per sampled sweep"),
    congruence: bool = typer.Option(True, "--congruence/--no-congruence", help="Include the coroot congruence in ⪯"),
    hypothesis_q: bool = typer.Option(False, "--hypothesis-q", help="Record that the q-hypothesis is assumed"),
    fmt: str = typer.Option("text", "--format", help="json or text"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Write the report to this file"),
    timing: bool = typer.Option(False, "--timing", help="Include per-phase timing"),
    progress: bool = typer.Option(True, "--progress/--no-progress", help="Show progress bars on a terminal"),
):
    """Sweep one checker over a cell (or every cell of a grid)."""
    _require_format(fmt)
    from src.lab.config import CheckerConfig, load_grid
    from src.lab.registry import get_checker
    from src.lab.runner import run_many

    overrides: dict[str, Any] = {
        "max_height": max_height,
        "length_bound": length_bound,
        "instance_cap": instance_cap,
        "mode": mode,
        "seed": seed,
        "sample_size": sample_size,
    }
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if not congruence:
        overrides["congruence"] = False
    if hypothesis_q:
        overrides["hypothesis_q"] = True
    if lambdas:
        overrides["lambdas"] = [list(parse_vector(raw)) for raw in lambdas]

    try:
        get_checker(lemma_id)
        if grid is not None:
            defaults, cells = load_grid(grid)
            configs = [
                CheckerConfig.from_dict({**defaults, **cell, **overrides, "lemma_id": lemma_id}) for cell in cells
            ]
        else:
            cell = {"datum": parse_spec(type_spec), "sigma": parse_spec(sigma)}
            configs = [CheckerConfig.from_dict({**cell, **overrides, "lemma_id": lemma_id})]
        reports = run_many(configs, progress=progress)
    except AdlvError as err:
        raise _bail(err) from err

    _emit_reports(reports, fmt, output, timing)
    if timing and fmt == "text":
        _render_timing(reports)
    raise typer.Exit(_exit_code_for(reports, all(r.passed for r in reports)))


@app.command()
def suite(
    path: Path = typer.Argument(..., help="Suite file (YAML or JSON)"),
    fmt: str = typer.Option("text", "--format", help="json or text"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Write the report to this file"),
    timing: bool = typer.Option(False, "--timing", help="Include per-phase timing"),
    progress: bool = typer.Option(True, "--progress/--no-progress", help="Show progress bars on a terminal"),
):
    """Run a suite; exits nonzero iff an expectation fails."""
    _require_format(fmt)
    from src.lab.config import load_suite
    from src.lab.runner import suite_run

    try:
        loaded = load_suite(path)
        result = suite_run(loaded, progress=progress)
    except AdlvError as err:
        raise _bail(err) from err

    summary = result.summary()
    _emit_reports(result.reports, fmt, output, timing, summary)
    if fmt == "text":
        for failed in summary["entries_failed"]:
            console.print(f"[red]expectation not met: {failed}[/red]")
        for empty in summary["entries_vacuous"]:
            console.print(f"[yellow]no instances checked: {empty}[/yellow]")
        if timing:
            _render_timing(result.reports)
    raise typer.Exit(_exit_code_for(result.reports, result.ok))


@app.command()
def replay(
    report_path: Path = typer.Argument(..., help="A JSON report written by check or suite"),
    lemma: str = typer.Option(..., "--lemma", help="Lemma id of the report to replay"),
    index: int = typer.Option(0, "--index", help="Counterexample index within that report"),
    cell: int | None = typer.Option(
        None, "--cell", help="Position of the report among that lemma's reports (default: first with counterexamples)"
    ),
):
    """Re-execute one serialized counterexample."""
    from src.lab.report import load_report_document
    from src.lab.runner import replay as replay_one

    if not report_path.exists():
        console.print(f"[red]Report not found: {report_path}[/red]")
        raise typer.Exit(EXIT_BAD_INPUT)
    try:
        reports = load_report_document(report_path.read_text(encoding="utf-8"))
        matching = [r for r in reports if r.lemma_id == lemma]
        if cell is None:
            candidates = [r for r in matching if r.counterexamples]
            if not candidates:
                raise ConfigParse(f"no report for {lemma} carries counterexamples")
            chosen = candidates[0]
        else:
            if not 0 <= cell < len(matching):
                raise IndexError(f"{lemma} has {len(matching)} reports, no cell {cell}")
            chosen = matching[cell]
        inst, holds = replay_one(chosen, index)
    except IndexError as err:
        console.print(f"[red]{err}[/red]")
        raise typer.Exit(EXIT_BAD_INPUT) from err
    except AdlvError as err:
        raise _bail(err) from err

    _print_json(
        {
            "lemma_id": lemma,
            "datum": chosen.config.datum,
            "sigma": chosen.config.sigma,
            "index": index,
            "instance": inst,
            "reproduced": not holds,
        }
    )
    raise typer.Exit(EXIT_FAILED if not holds else EXIT_OK)


if __name__ == "__main__":
    app()
