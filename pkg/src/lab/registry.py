"""Checker registry.

A checker enumerates the instances on which its hypothesis holds and decides
the conclusion for one instance.  Instances are plain JSON-ready dicts so a
counterexample can be replayed from a report alone.  Every registered id also
resolves with the suffix ``!neg``: the same sweep with the conclusion negated.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any

from src.errors import UnknownLemma
from src.lab.context import CheckContext

Instance = dict[str, Any]

NEG_SUFFIX = "!neg"


class Checker(ABC):
    lemma_id: str = ""
    area: str = ""
    quote: str = ""

    @abstractmethod
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        """Instances satisfying the hypothesis."""

    @abstractmethod
    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        """The conclusion on one instance."""


@dataclass
class Negated(Checker):
    base: Checker

    def __post_init__(self):
        self.lemma_id = self.base.lemma_id + NEG_SUFFIX
        self.area = self.base.area
        self.quote = f"negation of: {self.base.quote}"

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        return self.base.instances(ctx)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        return not self.base.holds(ctx, inst)


_REGISTRY: dict[str, Checker] = {}


def register(lemma_id: str, area: str, quote: str):
    def wrap(cls: type[Checker]) -> type[Checker]:
        if lemma_id in _REGISTRY:
            raise ValueError(f"duplicate checker id {lemma_id}")
        cls.lemma_id, cls.area, cls.quote = lemma_id, area, quote
        _REGISTRY[lemma_id] = cls()
        return cls

    return wrap


def _load() -> None:
    # importing the modules populates the registry
    from src.lab.checkers import appendix, conjugation, flat, leaves, levi_arrows, orbit_types  # noqa: F401


def get_checker(lemma_id: str) -> Checker:
    _load()
    base_id = lemma_id.removesuffix(NEG_SUFFIX)
    base = _REGISTRY.get(base_id)
    if base is None:
        raise UnknownLemma(f"unknown lemma id '{lemma_id}'")
    return Negated(base) if lemma_id.endswith(NEG_SUFFIX) else base


def all_checkers() -> list[Checker]:
    _load()
    return list(_REGISTRY.values())


def lemma_ids(area: str | None = None) -> list[str]:
    return [c.lemma_id for c in all_checkers() if area is None or c.area == area]
