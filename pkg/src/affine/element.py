"""Value types of the extended affine Weyl group W~ = Y ⋊ W0."""

from __future__ import annotations

from dataclasses import dataclass

from src.rootdata.weyl import WeylElem


@dataclass(frozen=True, slots=True)
class ExtAffElem:
    """t^mu w, acting on V by v -> mu + w(v)."""

    mu: tuple[int, ...]
    w: WeylElem

    @property
    def datum_key(self) -> str:
        return self.w.datum_key

    @property
    def is_translation(self) -> bool:
        return self.w.index == 0


@dataclass(frozen=True, slots=True)
class AffRoot:
    """The affine function v -> -<alpha, v> + k; ``alpha`` is a root index."""

    alpha: int
    k: int


@dataclass(frozen=True, slots=True)
class SimpleReflection:
    label: str
    elem: ExtAffElem
    root: AffRoot
    component: int
    finite_index: int | None  # None for the affine reflection of a component

    @property
    def is_affine(self) -> bool:
        return self.finite_index is None
