"""The decomposition of S_{lambda,b} into leaves and the predicted component group."""

from __future__ import annotations

from collections.abc import Iterator

from src.components.leaves import full_scan, s_leaf
from src.components.pi0 import pi0_prediction
from src.errors import LeafEmpty
from src.lab.checkers.levi_arrows import pair_inst, pair_member
from src.lab.context import CheckContext
from src.lab.instances import irreducible_pairs, nonempty_pairs
from src.lab.registry import Checker, Instance, register

AREA = "leaves"


@register("decomposition", AREA, "𝒮_{λ,b} = ⊔_{x} 𝒮_{λ,b,x}")
class Decomposition(Checker):
    """The leaves are pairwise disjoint and their union is the full scan of Adm(lambda)."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, b, _ in nonempty_pairs(ctx):
            yield pair_inst(ctx, lam, b)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        lam = tuple(inst["lambda"])
        b = ctx.parse(inst["b"])
        adm = ctx.adm(lam)
        union: set = set()
        total = 0
        for x in ctx.splus(lam, b).elements:
            try:
                leaf = s_leaf(ctx.sigma, adm, x)
            except LeafEmpty:
                continue
            union |= leaf.elements
            total += len(leaf.elements)
        return total == len(union) and frozenset(union) == full_scan(ctx.sigma, adm, b)


@register("leaf-unique", AREA, "a unique semi-standard element")
class LeafDistinguished(Checker):
    """Every non-empty leaf has exactly one member in ^{S0}W~."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, b, splus in nonempty_pairs(ctx):
            adm = ctx.adm(lam)
            for x in splus.elements:
                try:
                    s_leaf(ctx.sigma, adm, x)
                except LeafEmpty:
                    continue
                yield pair_inst(ctx, lam, b, x=list(x.cls))

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        _, x = pair_member(ctx, inst)
        leaf = s_leaf(ctx.sigma, ctx.adm(inst["lambda"]), x)
        return leaf.unique_distinguished is not None


@register("pi0-identity", AREA, "Ω_J^σ / (Ω_J^σ ∩ ker(η_G)) ≅ π₁(G)^σ as desired")
class Pi0Identity(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, b, _ in irreducible_pairs(ctx):
            yield pair_inst(ctx, lam, b)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        prediction = pi0_prediction(ctx.sigma, tuple(inst["lambda"]), ctx.parse(inst["b"]))
        return prediction.consistency
