"""Structured logging for adlv.

Sweeps log through :class:`StructuredLogger`, which carries the lemma id, the
grid cell's datum, the sweep phase and (for per-instance lines) the instance
itself.  ``setup_logging`` picks one of two renderings for those records:

* JSON lines, one object per record, for file sinks;
* plain text with the context appended as ``key=value`` pairs.

Call it once from the entry point before anything logs:
    from src.logging_setup import setup_logging
    setup_logging(level="DEBUG", json_mode=True, logger_names=["src"])
"""

from __future__ import annotations

import json
import logging
import sys
import time
from typing import Any

CONTEXT_KEYS = ("lemma_id", "datum", "phase", "instance")


def record_context(record: logging.LogRecord) -> dict[str, Any]:
    return {key: val for key in CONTEXT_KEYS if (val := getattr(record, key, None)) is not None}


class JSONFormatter(logging.Formatter):
    """One JSON object per record; instances stay nested objects."""

    def format(self, record: logging.LogRecord) -> str:
        payload: dict[str, Any] = {
            "ts": round(time.time(), 3),
            "level": record.levelname,
            "logger": record.name,
            "msg": record.getMessage(),
            **record_context(record),
        }
        if record.exc_info and record.exc_info[1] is not None:
            payload["exc"] = f"{type(record.exc_info[1]).__name__}: {record.exc_info[1]}"
        return json.dumps(payload, default=str, sort_keys=False)


class ContextFormatter(logging.Formatter):
    """Human-readable lines with the sweep context as a ``key=value`` suffix."""

    def __init__(self) -> None:
        super().__init__("%(asctime)s [%(levelname)-5s] %(name)s: %(message)s", datefmt="%Y-%m-%dT%H:%M:%S")

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        ctx = record_context(record)
        if not ctx:
            return line
        pairs = " ".join(f"{k}={json.dumps(v, default=str) if k == 'instance' else v}" for k, v in ctx.items())
        return f"{line} | {pairs}"


class StructuredLogger(logging.LoggerAdapter):
    """LoggerAdapter whose ``extra`` is the sweep context.

    Explicit ``extra=`` at a call site wins over the bound context.
    """

    def process(self, msg: str, kwargs: dict[str, Any]) -> tuple[str, dict[str, Any]]:
        extra = kwargs.setdefault("extra", {})
        for key, val in (self.extra or {}).items():
            extra.setdefault(key, val)
        return msg, kwargs

    def bind(self, **ctx: Any) -> StructuredLogger:
        """A copy with *ctx* merged in; ``None`` values are dropped."""
        merged = dict(self.extra or {})
        merged.update({k: v for k, v in ctx.items() if v is not None})
        return StructuredLogger(self.logger, merged)


def parse_level(level: int | str) -> int:
    if isinstance(level, int):
        return level
    value = logging.getLevelName(level.strip().upper())
    if not isinstance(value, int):
        raise ValueError(f"unknown log level {level!r}")
    return value


def setup_logging(
    level: int | str = logging.INFO,
    json_mode: bool = False,
    logger_names: list[str] | None = None,
) -> None:
    """Install one stderr handler on the root logger or on *logger_names*, replacing theirs."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(JSONFormatter() if json_mode else ContextFormatter())
    lvl = parse_level(level)
    for name in logger_names or [None]:
        target = logging.getLogger(name)
        target.setLevel(lvl)
        target.handlers = [handler]


def get_structured_logger(name: str, **ctx: Any) -> StructuredLogger:
    """A logger that attaches the non-``None`` entries of *ctx* to every record."""
    return StructuredLogger(logging.getLogger(name), {k: v for k, v in ctx.items() if v is not None})
