"""Instance universes shared by several checkers.

Every generator walks the cell in a fixed order (lambda list, then Adm(lambda)
in its sorted order, then simple reflections in label order), so the k-th
instance of a sweep is the same on every run.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations

from src.affine.element import ExtAffElem, SimpleReflection
from src.bruhat.admissible import AdmissibleSet
from src.components.leaves import SPlus
from src.components.levi import Pi1MJElem
from src.lab.context import CheckContext, IntVec


def admissible(ctx: CheckContext) -> Iterator[tuple[IntVec, AdmissibleSet, ExtAffElem]]:
    for lam in ctx.lambdas:
        adm = ctx.adm(lam)
        for w in adm:
            yield lam, adm, w


def admissible_with_simple(
    ctx: CheckContext, finite_only: bool = False
) -> Iterator[tuple[IntVec, AdmissibleSet, ExtAffElem, SimpleReflection]]:
    refl = ctx.group.finite_simple if finite_only else ctx.group.simple_reflections
    for lam, adm, w in admissible(ctx):
        for s in refl:
            yield lam, adm, w, s


def semi_standard_ball(ctx: CheckContext) -> Iterator[ExtAffElem]:
    for x in ctx.ball:
        if ctx.is_semi(x):
            yield x


def irreducible_pairs(ctx: CheckContext) -> Iterator[tuple[IntVec, ExtAffElem, SPlus]]:
    """Hodge-Newton irreducible (lambda, b) with a computable S+."""
    for lam, b in ctx.pairs():
        if not ctx.hn(lam, b).irreducible:
            continue
        splus = ctx.splus(lam, b)
        if splus is not None:
            yield lam, b, splus


def nonempty_pairs(ctx: CheckContext) -> Iterator[tuple[IntVec, ExtAffElem, SPlus]]:
    for lam, b in ctx.pairs():
        splus = ctx.splus(lam, b)
        if splus is not None:
            yield lam, b, splus


def subsets_of_s0(ctx: CheckContext) -> Iterator[frozenset[int]]:
    """Every subset K of S0 as simple indices, smallest first."""
    n = ctx.datum.rank
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            yield frozenset(combo)


def omega_below(
    ctx: CheckContext, stable_only: bool = False
) -> Iterator[tuple[IntVec, frozenset[int], Pi1MJElem]]:
    """(lambda, K, w~) with w~ = t^mu w in Omega_K the chosen representative of its class and mu ⪯ lambda.

    With ``stable_only`` K runs over the sigma-stable subsets of S0 only.
    """
    datum = ctx.datum
    subsets = ctx.stable_subsets if stable_only else list(subsets_of_s0(ctx))
    for lam in ctx.lambdas:
        saturation = sorted(datum.saturation(lam, ctx.congruence))
        for k in subsets:
            levi = ctx.levi(k)
            seen: set[IntVec] = set()
            for mu in saturation:
                cls = levi.class_of(mu)
                if cls in seen:
                    continue
                seen.add(cls)
                rep = levi.omega_rep(cls)
                if datum.preceq(rep.mu, lam, ctx.congruence):
                    yield lam, k, rep
