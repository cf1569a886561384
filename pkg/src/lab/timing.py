"""Per-phase wall-clock timing for checker runs."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

_PHASES = ("build", "generate", "check")


@dataclass
class TimingCollector:
    """Accumulates milliseconds per phase; ``generate`` and ``check`` interleave during a sweep."""

    build_ms: float = 0.0
    generate_ms: float = 0.0
    check_ms: float = 0.0

    _marks: dict[str, float] = field(default_factory=dict, repr=False)

    def mark(self, label: str) -> None:
        self._marks[label] = time.perf_counter()

    def pop(self, label: str) -> float:
        return (time.perf_counter() - self._marks.pop(label)) * 1000.0

    def add(self, phase: str, label: str) -> None:
        """Close the timer *label* and charge it to *phase*."""
        name = f"{phase}_ms"
        setattr(self, name, getattr(self, name) + self.pop(label))

    def merge(self, other: TimingCollector) -> None:
        for phase in _PHASES:
            name = f"{phase}_ms"
            setattr(self, name, getattr(self, name) + getattr(other, name))

    def to_dict(self) -> dict[str, Any]:
        phases = {name: round(getattr(self, f"{name}_ms"), 3) for name in _PHASES}
        return {"phases": phases, "total_ms": round(sum(phases.values()), 3)}
