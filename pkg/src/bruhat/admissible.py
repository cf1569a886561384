"""Admissible sets Adm(lambda) and the R-distinct predicates."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from src.affine.element import ExtAffElem, SimpleReflection
from src.affine.group import AffineWeylGroup
from src.bruhat.order import BruhatOrder, elem_sort_key
from src.errors import NotAdmissible, NotDominant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdmissibleSet:
    lam: tuple[int, ...]
    elements: tuple[ExtAffElem, ...]
    maximal_elements: tuple[ExtAffElem, ...]
    group: AffineWeylGroup = field(repr=False, compare=False)
    _index: frozenset[ExtAffElem] = field(repr=False, compare=False, default=frozenset())

    def __post_init__(self):
        object.__setattr__(self, "_index", frozenset(self.elements))

    def __contains__(self, x: ExtAffElem) -> bool:
        return x in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[ExtAffElem]:
        return iter(self.elements)

    @property
    def eta_class(self) -> tuple[int, ...]:
        return self.group.pi1.class_of(self.lam)

    def rank_generating_function(self) -> dict[int, int]:
        counts = Counter(self.group.length(x) for x in self.elements)
        return dict(sorted(counts.items()))

    @cached_property
    def boundary(self) -> tuple[ExtAffElem, ...]:
        """Elements s x or x s outside Adm(lambda) for x inside and s in S^a."""
        g = self.group
        out: dict[ExtAffElem, None] = {}
        for x in self.elements:
            for s in g.simple_reflections:
                for y in (g.compose(s.elem, x), g.compose(x, s.elem)):
                    if y not in self._index:
                        out[y] = None
        return tuple(sorted(out, key=lambda y: elem_sort_key(g, y)))

    def require(self, x: ExtAffElem) -> None:
        if x not in self._index:
            raise NotAdmissible(f"{x} is not in Adm({self.lam})")


def adm_set(group: AffineWeylGroup, lam: Sequence[int], order: BruhatOrder | None = None) -> AdmissibleSet:
    """Downward Bruhat closure of {t^{w lam}} by repeated down-covers."""
    lam = tuple(int(x) for x in lam)
    if not group.datum.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    order = order or BruhatOrder(group)
    tops = group.w0_translations(lam)
    seen: set[ExtAffElem] = set(tops)
    frontier = list(tops)
    while frontier:
        nxt = []
        for y in frontier:
            for z in order.covers_down(y):
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    elements = tuple(sorted(seen, key=lambda x: elem_sort_key(group, x)))
    logger.debug("Adm(%s) in %s: %d elements", lam, group.datum.label, len(elements))
    return AdmissibleSet(lam, elements, tuple(tops), group)


def adm_by_ball_filter(group: AffineWeylGroup, lam: Sequence[int], order: BruhatOrder | None = None) -> frozenset[ExtAffElem]:
    """Adm(lambda) as the elements of the l(t^lam)-ball below some t^{w lam}."""
    order = order or BruhatOrder(group)
    tops = group.w0_translations(lam)
    radius = group.length(tops[0])
    return frozenset(x for x in group.ball(radius) if any(order.leq(x, t) for t in tops))


def is_sigma_stable(adm: AdmissibleSet, apply_sigma) -> bool:
    """Adm(lambda) is carried to itself by the Frobenius (``apply_sigma`` acts on W~)."""
    return all(apply_sigma(x) in adm for x in adm.elements)


def distinct_test(adm: AdmissibleSet, x: ExtAffElem, orbit: Iterable[SimpleReflection], side: str) -> bool:
    """Left (right) R-distinct: s x (x s) lies outside Adm(lambda) for every s in R."""
    adm.require(x)
    g = adm.group
    if side == "left":
        return all(g.compose(s.elem, x) not in adm for s in orbit)
    if side == "right":
        return all(g.compose(x, s.elem) not in adm for s in orbit)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")
