"""The flat invariant and permissible roots."""

from __future__ import annotations

from collections.abc import Iterator

from sympy import Matrix

from src.affine.element import AffRoot, ExtAffElem
from src.bruhat.admissible import distinct_test
from src.components.leaves import full_scan
from src.lab.context import CheckContext
from src.lab.instances import admissible, irreducible_pairs, semi_standard_ball
from src.lab.registry import Checker, Instance, register
from src.sigma.conjugation import is_k_minimal, sigma_conjugate
from src.sigma.flat import flat_invariant, min_z0
from src.sigma.newton import twisted_finite_action
from src.sigma.permissible import TwistedRootAction, permissible

AREA = "flat"


def _orbit_mus(ctx: CheckContext, w: ExtAffElem, count: int) -> list[tuple]:
    """p(w sigma)^i(mu) for 0 <= i < count."""
    out = [w.mu]
    for _ in range(count - 1):
        out.append(twisted_finite_action(ctx.sigma, w, out[-1]))
    return out


def _first_nonzero(ctx: CheckContext, r: int, mus: list[tuple]) -> int | None:
    return next((i for i, mu in enumerate(mus) if ctx.datum.pair(r, mu) != 0), None)


def _permissible_set(ctx: CheckContext, lam, w: ExtAffElem) -> frozenset[int]:
    return permissible(ctx.sigma, w, ctx.adm(lam)).roots


@register("flat", AREA, "Then ⟨α, ν♭_w̃⟩⟨α, p(w̃σ)ⁿ(μ)⟩ > 0")
class FlatSign(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for w in ctx.ball:
            flat = flat_invariant(ctx.sigma, w)
            mus = _orbit_mus(ctx, w, flat.N)
            for r in range(len(ctx.datum.roots)):
                if _first_nonzero(ctx, r, mus) is not None:
                    yield {"w": ctx.fmt(w), "alpha": list(ctx.datum.roots[r])}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        w = ctx.parse(inst["w"])
        r = ctx.datum.index_of(inst["alpha"])
        flat = flat_invariant(ctx.sigma, w)
        mus = _orbit_mus(ctx, w, flat.N)
        n = _first_nonzero(ctx, r, mus)
        return ctx.datum.pair(r, flat.vec) * ctx.datum.pair(r, mus[n]) > 0


@register("dominant.1", AREA, "(1) ⟨α, ν♭_w̃⟩ = 0 if and only if ⟨α, p(w̃σ)^i(μ)⟩ = 0 for i ∈ ℤ")
class FlatZero(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for w in ctx.ball:
            for r in range(ctx.datum.n_pos):
                yield {"w": ctx.fmt(w), "alpha": list(ctx.datum.roots[r])}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        w = ctx.parse(inst["w"])
        r = ctx.datum.index_of(inst["alpha"])
        flat = flat_invariant(ctx.sigma, w)
        zero_orbit = _first_nonzero(ctx, r, _orbit_mus(ctx, w, flat.N)) is None
        return (ctx.datum.pair(r, flat.vec) == 0) == zero_orbit


@register("dominant.2", AREA, "(2) ν♭_w̃ is dominant for Φ⁺_{ν_w̃} if w̃ ∈ 𝒮")
class FlatDominant(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for w in semi_standard_ball(ctx):
            yield {"w": ctx.fmt(w)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        w = ctx.parse(inst["w"])
        datum = ctx.datum
        nu = ctx.newton(w).nu
        vec = flat_invariant(ctx.sigma, w).vec
        return all(datum.pair(r, vec) >= 0 for r in range(datum.n_pos) if datum.pair(r, nu) == 0)


@register("dominant.3", AREA, "(3) ν♭_{z w̃ σ(z)⁻¹} = z(ν♭_w̃) for z ∈ W_0")
class FlatEquivariant(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for w in ctx.ball:
            for z in ctx.group.W:
                yield {"w": ctx.fmt(w), "z": ctx.fmt(ctx.group.finite(z))}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        w = ctx.parse(inst["w"])
        z = ctx.parse(inst["z"])
        left = flat_invariant(ctx.sigma, sigma_conjugate(ctx.sigma, z, w)).vec
        right = ctx.group.W.act(z.w, flat_invariant(ctx.sigma, w).vec)
        return tuple(left) == tuple(right)


@register("dominant.4", AREA, "(4) w̃σ(Φ̃^±_{ν♭_w̃}) = Φ̃^±_{ν♭_w̃} if w̃ ∈ 𝒮")
class FlatStable(Checker):
    """On each root alpha of Phi_{nu^flat}, w sigma sends (alpha, k) to (alpha', k + c) with alpha' in the
    same Levi and the positivity threshold shifted by exactly c."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for w in semi_standard_ball(ctx):
            yield {"w": ctx.fmt(w)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        w = ctx.parse(inst["w"])
        datum = ctx.datum
        vec = flat_invariant(ctx.sigma, w).vec
        action = TwistedRootAction(ctx.sigma, w)

        def threshold(r: int) -> int:
            return 1 if datum.is_positive(r) else 0

        for r in range(len(datum.roots)):
            if datum.pair(r, vec) != 0:
                continue
            image = action.forward(AffRoot(r, 0))
            if datum.pair(image.alpha, vec) != 0 or threshold(r) != threshold(image.alpha) - image.k:
                return False
        return True


@register("dominant.5", AREA, "(5) if α ∈ 𝒫_w̃, then ⟨α^i, ν♭_w̃⟩ < 0 for 1−m_{α,w̃} ≤ i ≤ 0, and the roots α^i are linearly independent")
class PermissibleOrbit(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, _, w in admissible(ctx):
            for r in sorted(_permissible_set(ctx, lam, w)):
                yield {"lambda": list(lam), "w": ctx.fmt(w), "alpha": list(ctx.datum.roots[r])}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        datum = ctx.datum
        w = ctx.parse(inst["w"])
        r = datum.index_of(inst["alpha"])
        m = permissible(ctx.sigma, w, ctx.adm(inst["lambda"])).m_map[r]
        vec = flat_invariant(ctx.sigma, w).vec
        orbit = TwistedRootAction(ctx.sigma, w).orbit(AffRoot(r, 0), 1 - m, 0)
        roots = [orbit[i] for i in range(1 - m, 1)]
        if any(root.k != 0 or datum.pair(root.alpha, vec) >= 0 for root in roots):
            return False
        rows = Matrix([list(datum.roots[root.alpha]) for root in roots])
        return rows.rank() == len(roots)


@register("min", AREA, "Then z₀ w̃ σ(z₀)⁻¹ ∈ ^{S₀} W̃")
class MinimalConjugator(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for w in semi_standard_ball(ctx):
            yield {"w": ctx.fmt(w)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        w = ctx.parse(inst["w"])
        _, conj = min_z0(ctx.sigma, w)
        if not is_k_minimal(ctx.group, conj, ctx.s0):
            return False
        if ctx.datum.is_dominant(flat_invariant(ctx.sigma, w).vec):
            return is_k_minimal(ctx.group, w, ctx.s0)
        return True


@register("permissible", AREA, "Then w_R w̃ w_R ∈ Adm(λ) is right R-distinct. Moreover, 𝒫_{w_R w̃ w_R} ≠ ∅ if 𝒫_w̃ ≠ ∅")
class PermissibleTransfer(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, adm, w in admissible(ctx):
            for orbit in ctx.sigma_orbit_reflections:
                if distinct_test(adm, w, orbit, "left"):
                    yield {"lambda": list(lam), "w": ctx.fmt(w), "R": sorted(s.label for s in orbit)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        adm = ctx.adm(inst["lambda"])
        w = ctx.parse(inst["w"])
        longest = max(ctx.parabolic(inst["R"]), key=g.length)
        conj = g.mul(longest, w, longest)
        if conj not in adm or not distinct_test(adm, conj, ctx.refl(inst["R"]), "right"):
            return False
        if _permissible_set(ctx, inst["lambda"], w):
            return bool(_permissible_set(ctx, inst["lambda"], conj))
        return True


@register("existence", AREA, "Then 𝒫_w̃ ≠ ∅")
class PermissibleExists(Checker):
    """w in Adm(lambda) semi-standard, outside ^R W~ and not right R-distinct."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        g = ctx.group
        for lam, adm, w in admissible(ctx):
            if not ctx.is_semi(w):
                continue
            for orbit in ctx.sigma_orbit_reflections:
                labels = sorted(s.label for s in orbit)
                if is_k_minimal(g, w, labels) or distinct_test(adm, w, orbit, "right"):
                    continue
                yield {"lambda": list(lam), "w": ctx.fmt(w), "R": labels}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        return bool(_permissible_set(ctx, inst["lambda"], ctx.parse(inst["w"])))


@register("non-empty", AREA, "we have either w̃ ∈ ^{S₀} W̃ or 𝒫_w̃ ≠ ∅")
class NonEmpty(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, b, _ in irreducible_pairs(ctx):
            for w in sorted(full_scan(ctx.sigma, ctx.adm(lam), b), key=ctx.fmt):
                yield {"lambda": list(lam), "b": ctx.fmt(b), "w": ctx.fmt(w)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        w = ctx.parse(inst["w"])
        return is_k_minimal(ctx.group, w, ctx.s0) or bool(_permissible_set(ctx, inst["lambda"], w))
