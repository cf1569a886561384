"""Levi data attached to (lambda, b): the Omega_K elements, the arrows on S^+ and the weakly dominant witnesses."""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache
from math import lcm

from src.affine.element import AffRoot, ExtAffElem
from src.components.arrows import arrows, component_orbit_size
from src.components.leaves import SPlus
from src.components.levi import Pi1MJElem
from src.components.orbits import anti_dominant_orbits, orbit_info
from src.errors import AdlvError
from src.lab.context import CheckContext, IntVec
from src.lab.instances import irreducible_pairs, nonempty_pairs, omega_below
from src.lab.registry import Checker, Instance, register

AREA = "levi"

# Bourbaki labels of E6, zero-based
_E6_BETA = 2
_E6_J0 = frozenset({0, 5})
_E6_J1 = frozenset({1, 3})


def add(a, b, sign: int = 1) -> tuple:
    return tuple(x + sign * y for x, y in zip(a, b, strict=True))


def fixes(ctx: CheckContext, rep: ExtAffElem, r: int) -> bool:
    """w~ fixes the affine root (alpha, 0): p(w~) alpha = alpha and <alpha, mu> = 0."""
    root = AffRoot(r, 0)
    return ctx.group.act_on_affroot(rep, root) == root


def affine_reflection(ctx: CheckContext, gamma: int, power: int = 0) -> ExtAffElem:
    """s_{sigma^power(gamma~)} for gamma~ = gamma + 1."""
    return ctx.group.affine_reflection(ctx.sigma.affroot(AffRoot(gamma, 1), power))


def pair_member(ctx: CheckContext, inst: Instance) -> tuple[SPlus, Pi1MJElem]:
    splus = ctx.splus(tuple(inst["lambda"]), ctx.parse(inst["b"]))
    return splus, splus.by_class()[tuple(inst["x"])]


def pair_inst(ctx: CheckContext, lam, b: ExtAffElem, **extra) -> Instance:
    return {"lambda": list(lam), "b": ctx.fmt(b), **extra}


@lru_cache(maxsize=256)
def _w0_orbit(group, r: int) -> tuple[int, ...]:
    return tuple(sorted({w.perm[r] for w in group.W}))


# ----------------------------------------------------------------------
# Omega_K elements and a root gamma (the shared situation of orth and line)
# ----------------------------------------------------------------------


def _twisted_coroot(ctx: CheckContext, x: Pi1MJElem, gamma: int, r: int) -> tuple:
    """w sigma^r(gamma^vee)."""
    return ctx.group.W.act(x.rep.w, ctx.datum.coroots[ctx.sigma.root(gamma, r)])


def _orth_vectors(ctx: CheckContext, x: Pi1MJElem, gamma: int, r: int) -> tuple[tuple, tuple, tuple]:
    lowered = add(x.mu, ctx.datum.coroots[gamma], -1)
    twisted = _twisted_coroot(ctx, x, gamma, r)
    return lowered, add(x.mu, twisted), add(lowered, twisted)


def _orth_universe(ctx: CheckContext, strongly: bool = False) -> Iterator[tuple]:
    datum = ctx.datum
    for lam, k, x in omega_below(ctx, stable_only=True):
        inside = set(datum.roots_of(k))
        for gamma in range(datum.n_pos):
            if gamma in inside:
                continue
            flags = datum.classify_coweight(datum.coroots[gamma], k, require_coroot=strongly)
            if not (flags.k_dominant and flags.k_minuscule):
                continue
            if strongly and not flags.strongly_k_minuscule:
                continue
            for r in range(ctx.sigma.order):
                if all(datum.preceq(v, lam, ctx.congruence) for v in _orth_vectors(ctx, x, gamma, r)):
                    yield lam, k, x, gamma, r


def _orth_inst(ctx: CheckContext, lam, k, x: Pi1MJElem, gamma: int, r: int) -> Instance:
    return {
        "lambda": list(lam),
        "K": sorted(k),
        "x": list(x.cls),
        "gamma": list(ctx.datum.roots[gamma]),
        "r": r,
    }


def _orth_unpack(ctx: CheckContext, inst: Instance):
    x = ctx.levi(inst["K"]).omega_rep(inst["x"])
    return tuple(inst["lambda"]), frozenset(inst["K"]), x, ctx.datum.index_of(inst["gamma"]), inst["r"]


class _OrthBase(Checker):
    strongly = False

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, k, x, gamma, r in _orth_universe(ctx, self.strongly):
            if self.applies(ctx, x, gamma, r):
                yield _orth_inst(ctx, lam, k, x, gamma, r)

    def applies(self, ctx: CheckContext, x: Pi1MJElem, gamma: int, r: int) -> bool:
        return True


@register("orth.1", AREA, "(1) μ − γ∨, μ + w(σ^r(γ∨)), μ − γ∨ + wσ^r(γ∨) are K-minuscule")
class OrthMinuscule(_OrthBase):
    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        _, k, x, gamma, r = _orth_unpack(ctx, inst)
        return all(ctx.datum.classify_coweight(v, k).k_minuscule for v in _orth_vectors(ctx, x, gamma, r))


@register("orth.2", AREA, "(2) w̃, s_γ̃ w̃, w̃ s_{σ^r(γ̃)}, s_γ̃ w̃ s_γ̃ ∈ Adm(λ)")
class OrthAdmissible(_OrthBase):
    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        lam, _, x, gamma, r = _orth_unpack(ctx, inst)
        adm = ctx.adm(lam)
        w = x.rep
        s_gamma = affine_reflection(ctx, gamma)
        s_twisted = affine_reflection(ctx, gamma, r)
        elems = (w, g.compose(s_gamma, w), g.compose(w, s_twisted), g.mul(s_gamma, w, s_gamma))
        return all(e in adm for e in elems)


@register("orth.3", AREA, "(3) s_γ̃ w̃ s_{σ^r(γ̃)} ∈ Adm(λ) if γ ≠ σ^r(γ) and −⟨w σ^r(γ), μ⟩, ⟨γ, μ⟩ ≤ 1")
class OrthTwisted(_OrthBase):
    def applies(self, ctx: CheckContext, x: Pi1MJElem, gamma: int, r: int) -> bool:
        datum = ctx.datum
        twisted = ctx.sigma.root(gamma, r)
        if twisted == gamma:
            return False
        return -datum.pair(x.rep.w.perm[twisted], x.mu) <= 1 and datum.pair(gamma, x.mu) <= 1

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        lam, _, x, gamma, r = _orth_unpack(ctx, inst)
        elem = ctx.group.mul(affine_reflection(ctx, gamma), x.rep, affine_reflection(ctx, gamma, r))
        return elem in ctx.adm(lam)


@register("line", AREA, "unless (*) ⟨γ, μ⟩ = −⟨w σ^r(γ), μ⟩ = 1 and ⟨γ, wσ^r(γ^∨)⟩ = −1, in which case w̃ ≠ w̃′")
class Line(_OrthBase):
    """Outside (*) the elements w, s_gamma~ w and w s_{sigma^r(gamma~)} are admissible.

    Under (*) the class w' = mu - gamma^vee + sigma^r(gamma^vee) differs from
    the class of w, mu_{w'} ⪯ lambda and mu ± (gamma^vee + w sigma^r(gamma^vee)) ⪯ lambda.
    """

    strongly = True

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        datum = ctx.datum
        lam, k, x, gamma, r = _orth_unpack(ctx, inst)
        mu = x.mu
        twisted = _twisted_coroot(ctx, x, gamma, r)
        star = (
            datum.pair(gamma, mu) == 1
            and datum.pair(x.rep.w.perm[ctx.sigma.root(gamma, r)], mu) == -1
            and datum.pair(gamma, twisted) == -1
        )
        if not star:
            adm = ctx.adm(lam)
            w = x.rep
            return all(
                e in adm
                for e in (w, g.compose(affine_reflection(ctx, gamma), w), g.compose(w, affine_reflection(ctx, gamma, r)))
            )
        levi = ctx.levi(k)
        shift = add(ctx.datum.coroots[ctx.sigma.root(gamma, r)], datum.coroots[gamma], -1)
        swapped = levi.omega_rep(add(mu, shift))
        if swapped.cls == x.cls or not datum.preceq(swapped.mu, lam, ctx.congruence):
            return False
        both = add(datum.coroots[gamma], twisted)
        return all(datum.preceq(add(mu, both, sign), lam, ctx.congruence) for sign in (1, -1))


# ----------------------------------------------------------------------
# Arrows on S^+
# ----------------------------------------------------------------------


@register("saturate", AREA, "Then w̃_x σ^i(δ) = σ^i(δ) for any W₀-conjugate δ of γ and 1 ≤ i ≤ r−1 with i, i−r ∉ dℤ")
class Saturate(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, b, splus in irreducible_pairs(ctx):
            for e in arrows(ctx.sigma, lam, splus, ctx.congruence).tail_edges:
                if e.x != e.x2:
                    yield pair_inst(
                        ctx, lam, b, x=list(e.x), x2=list(e.x2), gamma=list(ctx.datum.roots[e.gamma]), r=e.r
                    )

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        _, x = pair_member(ctx, inst)
        gamma = ctx.datum.index_of(inst["gamma"])
        r = inst["r"]
        d = component_orbit_size(ctx.sigma, gamma)
        steps = [i for i in range(1, r) if i % d and (i - r) % d]
        return all(fixes(ctx, x.rep, ctx.sigma.root(delta, i)) for delta in _w0_orbit(ctx.group, gamma) for i in steps)


@register("conneted", AREA, "there exist distinct elements x = x₀, x₁, …, x_m = x′ ∈ 𝒮⁺_{λ,b}")
class Connected(Checker):
    """The ↣-graph on J-dominant J-minuscule gamma spans S^+, and -> is symmetric under gamma -> -gamma."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, b, _ in irreducible_pairs(ctx):
            yield pair_inst(ctx, lam, b)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        lam = tuple(inst["lambda"])
        graph = arrows(ctx.sigma, lam, ctx.splus(lam, ctx.parse(inst["b"])), ctx.congruence)
        return graph.connected and graph.symmetric


@register("pr", AREA, "(1) Σ_{α∈𝒪}⟨α, pr_J(μ_x)⟩ > 0, and (2) ⟨w_J(β), μ_x⟩ ≥ 1 for some β ∈ 𝒪")
class Projection(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, b, splus in irreducible_pairs(ctx):
            orbits = anti_dominant_orbits(ctx.sigma, splus.levi)
            for x in splus.elements:
                for orbit in orbits:
                    yield pair_inst(ctx, lam, b, x=list(x.cls), orbit=[list(ctx.datum.roots[a]) for a in orbit])

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        datum = ctx.datum
        splus, x = pair_member(ctx, inst)
        orbit = [datum.index_of(a) for a in inst["orbit"]]
        projected = datum.project(splus.J, x.mu)
        if sum(datum.pair(a, projected) for a in orbit) <= 0:
            return False
        w_j = ctx.group.W.longest(splus.J)
        return any(datum.pair(w_j.perm[a], x.mu) >= 1 for a in orbit)


# ----------------------------------------------------------------------
# K-anti-dominant roots against Omega_K
# ----------------------------------------------------------------------


def _anti_roots(ctx: CheckContext, k: frozenset[int]) -> list[int]:
    datum = ctx.datum
    return [a for a in range(datum.n_pos) if datum.classify_coweight(datum.coroots[a], k).k_antidominant]


def _anti_inst(ctx: CheckContext, lam, k, x: Pi1MJElem, alpha: int) -> Instance:
    return {"lambda": list(lam), "K": sorted(k), "x": list(x.cls), "alpha": list(ctx.datum.roots[alpha])}


@register("anti.1", AREA, "(1) w̃ s_α ∈ Adm(λ) if μ + α∨ ⪯ λ")
class AntiRight(Checker):
    """With the base alcove in the dominant chamber the hypothesis reads mu - alpha^vee ⪯ lambda."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        datum = ctx.datum
        for lam, k, x in omega_below(ctx):
            for a in _anti_roots(ctx, k):
                if datum.preceq(add(x.mu, datum.coroots[a], -1), lam, ctx.congruence):
                    yield _anti_inst(ctx, lam, k, x, a)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        x = ctx.levi(inst["K"]).omega_rep(inst["x"])
        s_alpha = ctx.reflection(ctx.datum.index_of(inst["alpha"]))
        return ctx.group.compose(x.rep, s_alpha) in ctx.adm(inst["lambda"])


@register("anti.2", AREA, "(2) s_α w̃ ∈ Adm(λ) if μ − w(α)∨ ⪯ λ")
class AntiLeft(Checker):
    """With the base alcove in the dominant chamber the hypothesis reads mu + w(alpha)^vee ⪯ lambda."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        datum = ctx.datum
        W = ctx.group.W
        for lam, k, x in omega_below(ctx):
            for a in _anti_roots(ctx, k):
                if datum.preceq(add(x.mu, W.act(x.rep.w, datum.coroots[a])), lam, ctx.congruence):
                    yield _anti_inst(ctx, lam, k, x, a)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        x = ctx.levi(inst["K"]).omega_rep(inst["x"])
        s_alpha = ctx.reflection(ctx.datum.index_of(inst["alpha"]))
        return ctx.group.compose(s_alpha, x.rep) in ctx.adm(inst["lambda"])


@register("anti.3", AREA, "(3) z w̃ z⁻¹ ∈ Adm(λ) for z ∈ W̃^K")
class AntiConjugate(Checker):
    """z runs over W0^K, the finite elements minimal in z W_K."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        g = ctx.group
        for lam, k, x in omega_below(ctx):
            if x.rep not in ctx.adm(lam):
                continue
            for w in g.W.min_right_coset_reps(k):
                z = g.finite(w)
                yield {"lambda": list(lam), "K": sorted(k), "x": list(x.cls), "z": ctx.fmt(z)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        x = ctx.levi(inst["K"]).omega_rep(inst["x"])
        z = ctx.parse(inst["z"])
        return g.mul(z, x.rep, g.invert(z)) in ctx.adm(inst["lambda"])


# ----------------------------------------------------------------------
# J_0 / J_1
# ----------------------------------------------------------------------


@register("J1-decomp", AREA, "Define J₁ = ∪_{x} J_{x,1} and J₀ = J ∖ J₁")
class CentralDecomposition(Checker):
    """J_{x,0} is recomputed component by component from the pairings <alpha_j, sigma^i(mu_x)>."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, b, _ in nonempty_pairs(ctx):
            yield pair_inst(ctx, lam, b)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        datum = ctx.datum
        sigma = ctx.sigma
        splus = ctx.splus(tuple(inst["lambda"]), ctx.parse(inst["b"]))
        J = splus.J
        parts = splus.levi.central_parts(splus.elements)
        if parts.J0 | parts.J1 != J or parts.J0 & parts.J1:
            return False
        j1: set[int] = set()
        for x in splus.elements:
            zero: set[int] = set()
            for part in datum.connected_parts(J):
                simple = [datum.simple_root_indices[j] for j in part]
                if all(datum.pair(a, sigma.coweight(x.mu, i)) == 0 for a in simple for i in range(sigma.order)):
                    zero |= part
            if parts.per_x[x.cls] != (frozenset(zero), J - zero):
                return False
            j1 |= J - zero
        if frozenset(j1) != parts.J1:
            return False
        return all(sigma.simple_perm[j] in parts.J0 for j in parts.J0)


# ----------------------------------------------------------------------
# Weakly dominant witnesses
# ----------------------------------------------------------------------


@register("choice", AREA, "there exists β ∈ Φ⁺ such that ⟨β, μ + α∨⟩ ≤ −2, and either μ + β∨ ⪯ λ or μ + α∨ + β∨ ≤ λ")
class Choice(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        datum = ctx.datum
        for lam in ctx.lambdas:
            for mu in sorted(datum.saturation(lam, ctx.congruence)):
                for a in range(datum.n_pos):
                    raised = add(mu, datum.coroots[a])
                    if datum.leq_cone(raised, lam) and not datum.preceq(raised, lam, ctx.congruence):
                        yield {"lambda": list(lam), "mu": list(mu), "alpha": list(datum.roots[a])}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        datum = ctx.datum
        lam = inst["lambda"]
        mu = tuple(inst["mu"])
        raised = add(mu, datum.coroots[datum.index_of(inst["alpha"])])
        for beta in range(datum.n_pos):
            if datum.pair(beta, raised) > -2:
                continue
            coroot = datum.coroots[beta]
            if datum.preceq(add(mu, coroot), lam, ctx.congruence) or datum.leq_cone(add(raised, coroot), lam):
                return True
        return False


def _k_blocks(ctx: CheckContext, j0: frozenset[int]) -> list[frozenset[int]]:
    """Unions of a sigma-orbit of connected components of J_0."""
    perm = ctx.sigma.simple_perm
    parts = ctx.datum.connected_parts(j0)
    seen: set[frozenset[int]] = set()
    out = []
    for part in parts:
        if part in seen:
            continue
        block: set[int] = set()
        cur = part
        while cur not in seen:
            seen.add(cur)
            block |= cur
            cur = frozenset(perm[j] for j in cur)
        out.append(frozenset(block))
    return out


class _WeakBase(Checker):
    """K a sigma-orbit of components of J_0 with mu_x'' + delta^vee not ⪯ lambda for every x'' and delta in Phi_K^+.

    The conclusion asks for one witness (x, beta) meeting the clauses up to
    ``depth``.
    """

    depth = 1

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        datum = ctx.datum
        for lam, b, splus in irreducible_pairs(ctx):
            j0 = splus.levi.central_parts(splus.elements).J0
            for k in _k_blocks(ctx, j0):
                roots_k = datum.positive_roots_of(k)
                if any(
                    datum.preceq(add(x.mu, datum.coroots[d]), lam, ctx.congruence)
                    for x in splus.elements
                    for d in roots_k
                ):
                    continue
                yield pair_inst(ctx, lam, b, K=sorted(k))

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        datum = ctx.datum
        lam = tuple(inst["lambda"])
        splus = ctx.splus(lam, ctx.parse(inst["b"]))
        k = frozenset(inst["K"])
        J = splus.J
        inside = set(datum.roots_of(J))
        candidates = []
        for beta in range(datum.n_pos):
            if beta in inside:
                continue
            flags = datum.classify_coweight(datum.coroots[beta], J)
            if flags.k_antidominant and flags.k_minuscule:
                candidates.append(beta)
        return any(self._witness(ctx, splus, lam, k, x, beta) for x in splus.elements for beta in candidates)

    def _witness(self, ctx: CheckContext, splus: SPlus, lam: IntVec, k: frozenset[int], x: Pi1MJElem, beta: int) -> bool:
        datum = ctx.datum
        sigma = ctx.sigma
        coroot = datum.coroots[beta]
        if not datum.preceq(add(x.mu, coroot), lam, ctx.congruence):
            return False
        if all(datum.pair(datum.simple_root_indices[j], coroot) == 0 for j in k):
            return False
        if self.depth == 1:
            return True
        try:
            info = orbit_info(sigma, splus.levi, sigma.root_orbit(beta))
        except AdlvError:
            return False
        n = info.n
        if not all(fixes(ctx, x.rep, sigma.root(beta, i)) for i in range(1, lcm(n, sigma.order)) if i % n):
            return False
        if self.depth == 2:
            return True
        if datum.pair(x.rep.w.perm[sigma.root(beta, n)], x.mu) < 1:
            return False
        if self.depth == 3:
            return True
        return self._rigid_clause(ctx, splus, info, x, beta)

    @staticmethod
    def _rigid_clause(ctx: CheckContext, splus: SPlus, info, x: Pi1MJElem, beta: int) -> bool:
        datum = ctx.datum
        psi_beta = next(p for p in info.psi_parts if beta in p)
        parts = splus.levi.central_parts(splus.elements)
        simple = datum.simple_root_indices
        j0_here = frozenset(j for j in parts.J0 if simple[j] in psi_beta)
        if all(ctx.sigma.root(simple[j], info.n) == simple[j] for j in j0_here):
            return True
        if [c.label for c in datum.components] != ["E6"] or len(info.psi) != len(datum.roots):
            return False
        j1_here = frozenset(j for j in parts.J1 if simple[j] in psi_beta)
        if j0_here != _E6_J0 or j1_here != _E6_J1 or beta != simple[_E6_BETA]:
            return False
        expected = [0] * datum.rank
        expected[3], expected[2] = 1, -1
        return tuple(x.mu) == tuple(expected)


@register("weak.1", AREA, "(1) μ_x + β∨ ⪯ λ, and β∨ is non-central on K")
class WeakNonCentral(_WeakBase):
    depth = 1


@register("weak.2", AREA, "(2) w̃_x σ^i(β) = σ^i(β) for i ∈ ℤ ∖ nℤ")
class WeakFixed(_WeakBase):
    depth = 2


@register("weak.3", AREA, "(3) ⟨w_x σⁿ(β), μ_x⟩ ≥ 1")
class WeakPositive(_WeakBase):
    depth = 3


@register("weak.4", AREA, "(4) if σⁿ does not act trivially on Ψ_β ∩ J₀, then Ψ = Φ, Ψ_β is of type E₆")
class WeakRigid(_WeakBase):
    depth = 4
