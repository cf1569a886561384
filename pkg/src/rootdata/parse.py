"""Root-datum specs: ``"A2"``, ``"A1xA1"``, ``"A2^2"`` or the JSON component form."""

from __future__ import annotations

import json
import os
import re
from functools import lru_cache
from pathlib import Path
from typing import Any

from src.errors import UnsupportedType
from src.rootdata.datum import DEFAULT_WEYL_BUDGET, RootDatum

_PIECE = re.compile(r"^([A-G])(\d+)(?:\^(\d+))?$")


def parse_datum_spec(spec: str | dict[str, Any] | list) -> tuple[tuple[str, int], ...]:
    """Normalize a datum spec to a tuple of (series, rank), one entry per simple component."""
    if isinstance(spec, str):
        text = spec.strip()
        if text.startswith("{"):
            return parse_datum_spec(json.loads(text))
        if text.endswith(".json") and Path(text).exists():
            return parse_datum_spec(json.loads(Path(text).read_text()))
        out: list[tuple[str, int]] = []
        for piece in text.replace("×", "x").split("x"):
            m = _PIECE.match(piece.strip().upper())
            if not m:
                raise UnsupportedType(f"cannot parse datum piece '{piece}'")
            copies = int(m.group(3) or 1)
            out.extend([(m.group(1), int(m.group(2)))] * copies)
        return tuple(out)
    if isinstance(spec, dict):
        comps = spec.get("components")
        if not isinstance(comps, list) or not comps:
            raise UnsupportedType("datum JSON needs a non-empty 'components' list")
        return parse_datum_spec(comps)
    out = []
    for item in spec:
        try:
            series = str(item["type"]).upper()
            rank = int(item["rank"])
            copies = int(item.get("copies", 1))
        except (KeyError, TypeError, ValueError) as err:
            raise UnsupportedType(f"bad component entry {item!r}") from err
        if copies < 1:
            raise UnsupportedType(f"component count must be >= 1, got {copies}")
        out.extend([(series, rank)] * copies)
    return tuple(out)


def weyl_budget() -> int:
    raw = os.environ.get("ADLV_WEYL_BUDGET")
    return int(raw) if raw else DEFAULT_WEYL_BUDGET


@lru_cache(maxsize=32)
def _cached_datum(components: tuple[tuple[str, int], ...], budget: int) -> RootDatum:
    return RootDatum(components, weyl_budget=budget)


def build_root_datum(spec: str | dict[str, Any] | list) -> RootDatum:
    """Build (or reuse) the adjoint root datum for *spec*."""
    return _cached_datum(parse_datum_spec(spec), weyl_budget())


def datum_to_json(datum: RootDatum) -> dict[str, Any]:
    return {
        "label": datum.label,
        "components": [{"type": c.series, "rank": c.rank} for c in datum.components],
        "rank": datum.rank,
        "cartan": [list(row) for row in datum.cartan],
        "positive_roots": [list(datum.roots[r]) for r in range(datum.n_pos)],
        "positive_coroots": [list(datum.coroots[r]) for r in range(datum.n_pos)],
        "weyl_order": len(datum.weyl),
        "inner_product": [[str(x) for x in row] for row in datum.inner_product],
    }
