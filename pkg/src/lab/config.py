"""Checker configuration, the desk-scale grid and suite files.

Grid and suite documents are YAML (JSON is accepted, being a YAML subset).
Everything is validated on load; malformed input raises ``ConfigParse``.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any

import yaml

from src.errors import ConfigParse

logger = logging.getLogger(__name__)

MODES = ("exhaustive", "sampled")
EXPECTS = ("pass", "counterexamples")
DEFAULT_GRID_PATH = Path("config/grid.yaml")


@dataclass
class CheckerConfig:
    lemma_id: str
    datum: Any = "A1"
    sigma: Any = "id"
    lambdas: list[list[int]] | None = None
    max_height: int = 4
    length_bound: int = 10
    instance_cap: int = 1_000_000
    seed: int = 0
    mode: str = "exhaustive"
    sample_size: int = 1_000
    congruence: bool = True
    hypothesis_q: bool = False
    class_budget: int = 20_000

    def __post_init__(self):
        if not isinstance(self.lemma_id, str) or not self.lemma_id:
            raise ConfigParse("lemma_id must be a non-empty string")
        if self.mode not in MODES:
            raise ConfigParse(f"mode must be one of {MODES}, got {self.mode!r}")
        for name in ("max_height", "length_bound", "instance_cap", "sample_size", "class_budget"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ConfigParse(f"{name} must be a non-negative integer, got {value!r}")
        if self.instance_cap == 0:
            raise ConfigParse("instance_cap must be positive")
        if self.lambdas is not None:
            try:
                self.lambdas = [[int(c) for c in lam] for lam in self.lambdas]
            except (TypeError, ValueError) as exc:
                raise ConfigParse(f"lambdas must be lists of integers: {exc}") from exc

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CheckerConfig:
        if not isinstance(data, dict):
            raise ConfigParse(f"checker config must be a mapping, got {type(data).__name__}")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigParse(f"unknown checker config keys: {', '.join(unknown)}")
        try:
            return cls(**data)
        except TypeError as exc:
            raise ConfigParse(str(exc)) from exc

    def to_json(self) -> dict[str, Any]:
        out = asdict(self)
        if self.mode == "exhaustive":
            out.pop("seed")
            out.pop("sample_size")
        return out

    def replace(self, **changes: Any) -> CheckerConfig:
        data = asdict(self)
        data.update(changes)
        return CheckerConfig.from_dict(data)


@dataclass
class SuiteEntry:
    lemma_id: str
    cells: list[dict[str, Any]]
    expect: str = "pass"
    overrides: dict[str, Any] = field(default_factory=dict)

    def configs(self, defaults: dict[str, Any]) -> list[CheckerConfig]:
        out = []
        for cell in self.cells:
            data = {**defaults, **cell, **self.overrides, "lemma_id": self.lemma_id}
            out.append(CheckerConfig.from_dict(data))
        return out


@dataclass
class Suite:
    name: str
    defaults: dict[str, Any]
    entries: list[SuiteEntry]


def load_document(path: Path | str) -> Any:
    path = Path(path)
    if not path.exists():
        raise ConfigParse(f"config file not found: {path}")
    text = path.read_text(encoding="utf-8")
    try:
        if path.suffix == ".json":
            return json.loads(text)
        return yaml.safe_load(text)
    except (yaml.YAMLError, json.JSONDecodeError) as exc:
        raise ConfigParse(f"cannot parse {path}: {exc}") from exc


def parse_grid(doc: Any) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    if not isinstance(doc, dict):
        raise ConfigParse("grid document must be a mapping with 'defaults' and 'cells'")
    defaults = doc.get("defaults") or {}
    cells = doc.get("cells") or []
    if not isinstance(defaults, dict) or not isinstance(cells, list):
        raise ConfigParse("grid 'defaults' must be a mapping and 'cells' a list")
    for i, cell in enumerate(cells):
        if not isinstance(cell, dict) or "datum" not in cell:
            raise ConfigParse(f"grid cell {i} must be a mapping with a 'datum' key")
    return defaults, cells


def load_grid(path: Path | str = DEFAULT_GRID_PATH) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    return parse_grid(load_document(path))


def parse_suite(doc: Any, name: str = "suite", base: Path | None = None) -> Suite:
    if doc is None:
        return Suite(name, {}, [])
    if not isinstance(doc, dict):
        raise ConfigParse("suite document must be a mapping")
    defaults: dict[str, Any] = {}
    grid_cells: list[dict[str, Any]] = []
    grid_ref = doc.get("grid")
    if grid_ref is not None:
        grid_path = Path(grid_ref)
        if base is not None and not grid_path.is_absolute() and not grid_path.exists():
            grid_path = base / grid_path
        defaults, grid_cells = load_grid(grid_path)
    defaults = {**defaults, **(doc.get("defaults") or {})}
    raw_entries = doc.get("entries") or []
    if not isinstance(raw_entries, list):
        raise ConfigParse("suite 'entries' must be a list")
    entries = []
    for i, raw in enumerate(raw_entries):
        if not isinstance(raw, dict) or "lemma_id" not in raw:
            raise ConfigParse(f"suite entry {i} must be a mapping with 'lemma_id'")
        expect = raw.get("expect", "pass")
        if expect not in EXPECTS:
            raise ConfigParse(f"suite entry {i}: expect must be one of {EXPECTS}")
        cells = raw.get("cells", grid_cells)
        if not isinstance(cells, list) or not cells:
            raise ConfigParse(f"suite entry {i} ({raw['lemma_id']}) has no cells")
        overrides = raw.get("overrides") or {}
        if not isinstance(overrides, dict):
            raise ConfigParse(f"suite entry {i}: overrides must be a mapping")
        entries.append(SuiteEntry(str(raw["lemma_id"]), list(cells), expect, dict(overrides)))
    suite = Suite(str(doc.get("name", name)), defaults, entries)
    for entry in entries:
        entry.configs(defaults)  # validate eagerly
    return suite


def load_suite(path: Path | str) -> Suite:
    path = Path(path)
    suite = parse_suite(load_document(path), name=path.stem, base=path.parent)
    logger.debug("loaded suite %s with %d entries", suite.name, len(suite.entries))
    return suite
