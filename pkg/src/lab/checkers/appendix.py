"""Distinct elements of Adm(lambda): the length and membership lemmas.

Only the Coxeter structure of W~ and membership in Adm(lambda) are used here,
so these checkers ignore sigma.
"""

from __future__ import annotations

from collections.abc import Iterator

from src.bruhat.admissible import distinct_test
from src.lab.context import CheckContext
from src.lab.instances import admissible, admissible_with_simple
from src.lab.registry import Checker, Instance, register

AREA = "appendix"


@register("commute", AREA, "Then w̃ = s w̃ s′")
class Commute(Checker):
    """l(s w) = l(w s') and l(s w s') = l(w) force w = s w s'."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        g = ctx.group
        for w in ctx.ball:
            lw = g.length(w)
            for s in g.simple_reflections:
                sw = g.compose(s.elem, w)
                for s2 in g.simple_reflections:
                    ws2 = g.compose(w, s2.elem)
                    if g.length(sw) != g.length(ws2):
                        continue
                    if g.length(g.compose(sw, s2.elem)) != lw:
                        continue
                    yield {"w": ctx.fmt(w), "s": s.label, "s2": s2.label}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        w = ctx.parse(inst["w"])
        return g.mul(g.simple(inst["s"]).elem, w, g.simple(inst["s2"]).elem) == w


class _R1Base(Checker):
    """Shared universe of the three R1 clauses: w in Adm(lambda) and s with w < s w."""

    def _base(self, ctx: CheckContext):
        g = ctx.group
        for lam, adm, w, s in admissible_with_simple(ctx):
            sw = g.compose(s.elem, w)
            if g.length(w) < g.length(sw):
                yield lam, adm, w, s, sw

    @staticmethod
    def _inst(ctx: CheckContext, lam, w, s) -> Instance:
        return {"lambda": list(lam), "w": ctx.fmt(w), "s": s.label}

    @staticmethod
    def _unpack(ctx: CheckContext, inst: Instance):
        g = ctx.group
        return ctx.adm(inst["lambda"]), ctx.parse(inst["w"]), g.simple(inst["s"]).elem


@register("R1.1", AREA, "(1) w̃ s ∈ Adm(λ) if w̃ s < s w̃ s")
class R1Part1(_R1Base):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        g = ctx.group
        for lam, _, w, s, sw in self._base(ctx):
            ws = g.compose(w, s.elem)
            if g.length(ws) < g.length(g.compose(sw, s.elem)):
                yield self._inst(ctx, lam, w, s)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        adm, w, s = self._unpack(ctx, inst)
        return ctx.group.compose(w, s) in adm


@register("R1.2", AREA, "(2) w̃ s = s w̃ if w̃ s ∉ Adm(λ)")
class R1Part2(_R1Base):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        g = ctx.group
        for lam, adm, w, s, _ in self._base(ctx):
            if g.compose(w, s.elem) not in adm:
                yield self._inst(ctx, lam, w, s)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        _, w, s = self._unpack(ctx, inst)
        g = ctx.group
        return g.compose(w, s) == g.compose(s, w)


@register("R1.3", AREA, "(3) s w̃ s ∈ Adm(λ) if ℓ(s w̃ s) = ℓ(w̃)")
class R1Part3(_R1Base):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        g = ctx.group
        for lam, _, w, s, sw in self._base(ctx):
            if g.length(g.compose(sw, s.elem)) == g.length(w):
                yield self._inst(ctx, lam, w, s)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        adm, w, s = self._unpack(ctx, inst)
        return ctx.group.mul(s, w, s) in adm


@register("R4", AREA, "Then s w̃ s ∉ Adm(λ)")
class R4(Checker):
    """w outside Adm(lambda) with w s > w.

    Candidates are the boundary of Adm(lambda) and the conjugates s y s of its
    elements: any w with s w s admissible is one of the latter.
    """

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        g = ctx.group
        for lam in ctx.lambdas:
            adm = ctx.adm(lam)
            candidates: dict = dict.fromkeys(adm.boundary)
            for y in adm:
                for s in g.simple_reflections:
                    candidates.setdefault(g.mul(s.elem, y, s.elem))
            for w in candidates:
                if w in adm:
                    continue
                for s in g.simple_reflections:
                    if g.length(g.compose(w, s.elem)) > g.length(w):
                        yield {"lambda": list(lam), "w": ctx.fmt(w), "s": s.label}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        s = g.simple(inst["s"]).elem
        return g.mul(s, ctx.parse(inst["w"]), s) not in ctx.adm(inst["lambda"])


@register("R-dist", AREA, "Then u′ w̃ u⁻¹ ∈ Adm(λ) if and only if u = u′")
class RDistinct(Checker):
    """Right R-distinct w and u, u' in W_R with l(u') <= l(u).

    On the instance u = u' = w_R the consequence is checked too: w_R w w_R is
    admissible and left R-distinct.
    """

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        g = ctx.group
        for lam, adm, w in admissible(ctx):
            for orbit in ctx.r_sets:
                if not distinct_test(adm, w, orbit, "right"):
                    continue
                labels = sorted(s.label for s in orbit)
                group_r = ctx.parabolic(labels)
                for u in group_r:
                    for u2 in group_r:
                        if g.length(u2) <= g.length(u):
                            yield {
                                "lambda": list(lam),
                                "w": ctx.fmt(w),
                                "R": labels,
                                "u": ctx.fmt(u),
                                "u2": ctx.fmt(u2),
                            }

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        adm = ctx.adm(inst["lambda"])
        w, u, u2 = (ctx.parse(inst[k]) for k in ("w", "u", "u2"))
        if (g.mul(u2, w, g.invert(u)) in adm) != (u == u2):
            return False
        group_r = ctx.parabolic(inst["R"])
        longest = max(group_r, key=g.length)
        if u == u2 == longest:
            conj = g.mul(longest, w, longest)
            return conj in adm and distinct_test(adm, conj, ctx.refl(inst["R"]), "left")
        return True


@register("LR", AREA, "Then s w̃ s_α s ∈ Adm(λ)")
class LeftRight(Checker):
    """s w s and w s_alpha admissible, s w not, alpha positive and not alpha_s."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        g = ctx.group
        datum = ctx.datum
        for lam, adm, w, s in admissible_with_simple(ctx, finite_only=True):
            sw = g.compose(s.elem, w)
            if sw in adm or g.compose(sw, s.elem) not in adm:
                continue
            alpha_s = datum.simple_root_indices[s.finite_index]
            for r in range(datum.n_pos):
                if r != alpha_s and g.compose(w, ctx.reflection(r)) in adm:
                    yield {"lambda": list(lam), "w": ctx.fmt(w), "s": s.label, "alpha": list(datum.roots[r])}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        s = g.simple(inst["s"]).elem
        s_alpha = ctx.reflection(ctx.datum.index_of(inst["alpha"]))
        return g.mul(s, ctx.parse(inst["w"]), s_alpha, s) in ctx.adm(inst["lambda"])


@register("conj", AREA, "Then u w̃ s_α u⁻¹ ∈ Adm(λ) for u ∈ W_R")
class Conj(Checker):
    """Left R-distinct w, alpha positive outside Phi_R with w s_alpha admissible."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        g = ctx.group
        datum = ctx.datum
        for lam, adm, w in admissible(ctx):
            for orbit in ctx.r_sets:
                if not distinct_test(adm, w, orbit, "left"):
                    continue
                phi_r = set(datum.positive_roots_of(s.finite_index for s in orbit))
                labels = sorted(s.label for s in orbit)
                for r in range(datum.n_pos):
                    if r in phi_r or g.compose(w, ctx.reflection(r)) not in adm:
                        continue
                    for u in ctx.parabolic(labels):
                        yield {
                            "lambda": list(lam),
                            "w": ctx.fmt(w),
                            "R": labels,
                            "alpha": list(datum.roots[r]),
                            "u": ctx.fmt(u),
                        }

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        u = ctx.parse(inst["u"])
        s_alpha = ctx.reflection(ctx.datum.index_of(inst["alpha"]))
        return g.mul(u, ctx.parse(inst["w"]), s_alpha, g.invert(u)) in ctx.adm(inst["lambda"])
