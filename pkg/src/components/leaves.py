"""The sets S^+_{lambda,b}, the leaves S_{lambda,b,x} and the full-scan oracle for S_{lambda,b}."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from src.affine.element import ExtAffElem
from src.bruhat.admissible import AdmissibleSet
from src.bruhat.order import elem_sort_key
from src.components.hodge_newton import HNStatus, hn_status
from src.components.levi import LeviData, Normalized, Pi1MJElem, levi_J_and_normalize
from src.errors import EmptyX, LeafEmpty
from src.sigma.conjugation import is_k_minimal, sigma_conjugate
from src.sigma.frobenius import Frobenius
from src.sigma.newton import is_semi_standard, newton_point

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SPlus:
    status: HNStatus
    normalized: Normalized
    levi: LeviData
    elements: tuple[Pi1MJElem, ...]

    @property
    def J(self) -> frozenset[int]:
        return self.normalized.J

    def by_class(self) -> dict[tuple[int, ...], Pi1MJElem]:
        return {x.cls: x for x in self.elements}


@dataclass(frozen=True)
class Leaf:
    x: Pi1MJElem
    elements: frozenset[ExtAffElem]
    distinguished: tuple[ExtAffElem, ...]

    @property
    def unique_distinguished(self) -> ExtAffElem | None:
        return self.distinguished[0] if len(self.distinguished) == 1 else None


def finite_labels(sigma: Frobenius) -> frozenset[str]:
    return frozenset(s.label for s in sigma.group.finite_simple)


def s_plus(sigma: Frobenius, lam: Sequence[int], b: ExtAffElem, congruence: bool = True, radius: int | None = None) -> SPlus:
    """Classes x of pi_1(M_J) with kappa_{M_J}(x) = kappa_{M_J}(b) and mu_x ⪯ lambda."""
    status = hn_status(sigma, lam, b)
    if not status.nonempty:
        raise EmptyX(f"X({tuple(lam)}, {b}) is empty")
    datum = sigma.datum
    norm = levi_J_and_normalize(sigma, b, radius)
    levi = LeviData(sigma, norm.J)
    target = levi.kappa(norm.b.mu)
    seen: dict[tuple[int, ...], Pi1MJElem] = {}
    for mu in sorted(datum.saturation(lam, congruence)):
        cls = levi.class_of(mu)
        if cls in seen:
            continue
        x = levi.omega_rep(cls)
        if levi.kappa(x.mu) == target and datum.preceq(x.mu, lam, congruence):
            seen[cls] = x
    elements = tuple(seen[c] for c in sorted(seen))
    logger.debug("S+ for lambda=%s b=%s: J=%s, %d classes", tuple(lam), b, sorted(norm.J), len(elements))
    return SPlus(status, norm, levi, elements)


def s_leaf(sigma: Frobenius, adm: AdmissibleSet, x: Pi1MJElem) -> Leaf:
    """{z w~_x sigma(z)^{-1} : z in W0^J} ∩ Adm(lambda), with its ^{S0}W~ members."""
    grp = sigma.group
    out = set()
    for z in grp.W.min_right_coset_reps(x.J):
        y = sigma_conjugate(sigma, grp.finite(z), x.rep)
        if y in adm:
            out.add(y)
    if not out:
        raise LeafEmpty(f"no W0^J-conjugate of {x.rep} lies in Adm({adm.lam})")
    labels = finite_labels(sigma)
    dist = tuple(sorted((y for y in out if is_k_minimal(grp, y, labels)), key=lambda y: elem_sort_key(grp, y)))
    return Leaf(x, frozenset(out), dist)


def full_scan(sigma: Frobenius, adm: AdmissibleSet, b: ExtAffElem) -> frozenset[ExtAffElem]:
    """S_{lambda,b} read straight off Adm(lambda): semi-standard elements sigma-conjugate to b."""
    ref = newton_point(sigma, b)
    out = set()
    for y in adm:
        nk = newton_point(sigma, y)
        if nk.newton != ref.newton or nk.kottwitz != ref.kottwitz:
            continue
        if is_semi_standard(sigma, y).semi_standard:
            out.add(y)
    return frozenset(out)


def classes_meeting(sigma: Frobenius, adm: AdmissibleSet) -> list[ExtAffElem]:
    """One representative per sigma-conjugacy class meeting Adm(lambda), shortest first."""
    grp = sigma.group
    reps: dict[tuple, ExtAffElem] = {}
    for y in sorted(adm, key=lambda y: elem_sort_key(grp, y)):
        nk = newton_point(sigma, y)
        reps.setdefault((nk.newton, nk.kottwitz), y)
    return list(reps.values())
