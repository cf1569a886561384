"""Per-cell state shared by every checker: the datum, sigma, the lambda list and memoized searches."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from functools import cached_property
from itertools import combinations

from src.affine.element import ExtAffElem, SimpleReflection
from src.affine.group import AffineWeylGroup, affine_group
from src.affine.notation import format_elem, parse_elem
from src.bruhat.admissible import AdmissibleSet, adm_set
from src.bruhat.order import BruhatOrder
from src.components.hodge_newton import HNStatus, hn_status
from src.components.leaves import SPlus, classes_meeting, s_plus
from src.components.levi import LeviData
from src.errors import EmptyX, NormalizationFailed
from src.lab.config import CheckerConfig
from src.rootdata.parse import build_root_datum
from src.sigma.conjugation import finite_subset, parabolic_subgroup
from src.sigma.frobenius import make_frobenius
from src.sigma.newton import NewtonKottwitz, SemiStandard, is_semi_standard, newton_point

logger = logging.getLogger(__name__)

Labels = frozenset[str]
IntVec = tuple[int, ...]


class CheckContext:
    def __init__(self, cfg: CheckerConfig):
        self.cfg = cfg
        self.datum = build_root_datum(cfg.datum)
        self.group: AffineWeylGroup = affine_group(self.datum)
        self.sigma = make_frobenius(self.group, cfg.sigma)
        self.order = BruhatOrder(self.group)
        self._adm: dict[IntVec, AdmissibleSet] = {}
        self._newton: dict[ExtAffElem, NewtonKottwitz] = {}
        self._semi: dict[ExtAffElem, SemiStandard] = {}
        self._splus: dict[tuple[IntVec, ExtAffElem], SPlus | None] = {}
        self._parabolic: dict[Labels, tuple[ExtAffElem, ...]] = {}
        self._levi: dict[frozenset[int], LeviData] = {}
        logger.debug("context for %s sigma=%s built", self.datum.label, self.sigma.name)

    # ------------------------------------------------------------------
    # Parameters
    # ------------------------------------------------------------------

    @cached_property
    def lambdas(self) -> list[IntVec]:
        if self.cfg.lambdas is not None:
            return [tuple(lam) for lam in self.cfg.lambdas]
        return self.datum.dominant_up_to_height(self.cfg.max_height)

    @cached_property
    def ball(self) -> list[ExtAffElem]:
        return self.group.ball(self.cfg.length_bound)

    @property
    def congruence(self) -> bool:
        return self.cfg.congruence

    def adm(self, lam: Iterable[int]) -> AdmissibleSet:
        lam = tuple(int(c) for c in lam)
        hit = self._adm.get(lam)
        if hit is None:
            hit = adm_set(self.group, lam, self.order)
            self._adm[lam] = hit
        return hit

    def newton(self, x: ExtAffElem) -> NewtonKottwitz:
        hit = self._newton.get(x)
        if hit is None:
            hit = newton_point(self.sigma, x)
            self._newton[x] = hit
        return hit

    def semi(self, x: ExtAffElem) -> SemiStandard:
        hit = self._semi.get(x)
        if hit is None:
            hit = is_semi_standard(self.sigma, x)
            self._semi[x] = hit
        return hit

    def is_semi(self, x: ExtAffElem) -> bool:
        return self.semi(x).semi_standard

    # ------------------------------------------------------------------
    # Subsets of simple reflections
    # ------------------------------------------------------------------

    @staticmethod
    def labels(indices: Iterable[int]) -> Labels:
        return frozenset(f"s{i + 1}" for i in indices)

    @cached_property
    def s0(self) -> Labels:
        return self.labels(range(self.datum.rank))

    @cached_property
    def orbits(self) -> list[Labels]:
        """sigma-orbits of S0."""
        return [self.labels(o) for o in self.sigma.simple_orbits]

    @cached_property
    def stable_subsets(self) -> list[frozenset[int]]:
        """Unions of sigma-orbits of S0, as simple indices (the empty set included)."""
        orbits = self.sigma.simple_orbits
        out = []
        for k in range(len(orbits) + 1):
            for combo in combinations(orbits, k):
                out.append(frozenset().union(*combo))
        return out

    @cached_property
    def k_families(self) -> list[Labels]:
        """S0, the sigma-stable subsets of S0 and every K in S^a with |K| <= 2 and W_K finite."""
        out: dict[Labels, None] = {self.s0: None}
        for sub in self.stable_subsets:
            if sub:
                out[self.labels(sub)] = None
        names = [s.label for s in self.group.simple_reflections]
        for k in (1, 2):
            for combo in combinations(names, k):
                if finite_subset(self.group, combo):
                    out[frozenset(combo)] = None
        return sorted(out, key=lambda k: (len(k), sorted(k)))

    @cached_property
    def r_sets(self) -> list[tuple[SimpleReflection, ...]]:
        """Singletons and pairs {s, s'} of S0 with m(s, s') in {2, 3}."""
        grp = self.group
        n = self.datum.rank
        out = [(grp.simple_by_index(i),) for i in range(n)]
        for i, j in combinations(range(n), 2):
            if self.datum.cartan[i][j] * self.datum.cartan[j][i] in (0, 1):
                out.append((grp.simple_by_index(i), grp.simple_by_index(j)))
        return out

    @cached_property
    def sigma_orbit_reflections(self) -> list[tuple[SimpleReflection, ...]]:
        return [tuple(self.group.simple_by_index(i) for i in sorted(o)) for o in self.sigma.simple_orbits]

    def parabolic(self, labels: Iterable[str]) -> tuple[ExtAffElem, ...]:
        key = frozenset(labels)
        hit = self._parabolic.get(key)
        if hit is None:
            hit = parabolic_subgroup(self.group, key, self.cfg.class_budget)
            self._parabolic[key] = hit
        return hit

    def levi(self, J: Iterable[int]) -> LeviData:
        key = frozenset(J)
        hit = self._levi.get(key)
        if hit is None:
            hit = LeviData(self.sigma, key)
            self._levi[key] = hit
        return hit

    def reflection(self, r: int) -> ExtAffElem:
        """s_alpha as an element of W~."""
        return self.group.finite(self.group.root_reflection(r))

    # ------------------------------------------------------------------
    # (lambda, b) instances
    # ------------------------------------------------------------------

    def hn(self, lam: IntVec, b: ExtAffElem) -> HNStatus:
        return hn_status(self.sigma, lam, b)

    def pairs(self) -> Iterator[tuple[IntVec, ExtAffElem]]:
        """Every (lambda, b) with [b] meeting Adm(lambda)."""
        for lam in self.lambdas:
            for b in classes_meeting(self.sigma, self.adm(lam)):
                yield lam, b

    def splus(self, lam: IntVec, b: ExtAffElem) -> SPlus | None:
        key = (lam, b)
        if key not in self._splus:
            try:
                self._splus[key] = s_plus(self.sigma, lam, b, self.congruence)
            except (EmptyX, NormalizationFailed) as exc:
                logger.warning("skipping (lambda=%s, b=%s): %s", lam, b, exc)
                self._splus[key] = None
        return self._splus[key]

    # ------------------------------------------------------------------
    # Serialization of instance parameters
    # ------------------------------------------------------------------

    def fmt(self, x: ExtAffElem) -> str:
        return format_elem(x)

    def parse(self, text: str) -> ExtAffElem:
        return parse_elem(self.group, text)

    def refl(self, labels: Iterable[str]) -> tuple[SimpleReflection, ...]:
        return tuple(self.group.simple(label) for label in sorted(labels))
