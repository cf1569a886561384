"""sigma-orbits of roots outside J: types, C-sets, and the order-3d configurations."""

from __future__ import annotations

from collections.abc import Iterator

from src.components.arrows import ArrowRelation, component_orbit_size
from src.components.leaves import SPlus
from src.components.levi import Pi1MJElem
from src.components.orbits import OrbitInfo, OrbitType, anti_dominant_orbits, c_set, orbit_info
from src.errors import AdlvError
from src.lab.checkers.levi_arrows import add, affine_reflection, fixes, pair_inst, pair_member
from src.lab.context import CheckContext
from src.lab.instances import irreducible_pairs
from src.lab.registry import Checker, Instance, register

AREA = "orbits"


def _relation(ctx: CheckContext, lam, splus: SPlus) -> ArrowRelation:
    return ArrowRelation(ctx.sigma, lam, splus, ctx.congruence)


def _info(ctx: CheckContext, splus: SPlus, root: int) -> OrbitInfo | None:
    try:
        return orbit_info(ctx.sigma, splus.levi, ctx.sigma.root_orbit(root))
    except AdlvError:
        return None


def _minuscule_orbits(ctx: CheckContext, splus: SPlus) -> list[tuple[int, ...]]:
    """sigma-orbits of J-anti-dominant J-minuscule roots in Phi+ minus Phi_J."""
    datum = ctx.datum
    out = []
    for orbit in anti_dominant_orbits(ctx.sigma, splus.levi):
        if all(datum.classify_coweight(datum.coroots[a], splus.J).k_minuscule for a in orbit):
            out.append(orbit)
    return out


def _theta_blocked(ctx: CheckContext, lam, splus: SPlus, info: OrbitInfo) -> bool:
    """mu_x'' + vartheta_beta^vee is never ⪯ lambda, for x'' in S^+ and beta in the orbit."""
    datum = ctx.datum
    return not any(
        datum.preceq(add(x.mu, datum.coroots[t]), lam, ctx.congruence)
        for x in splus.elements
        for t in info.vartheta.values()
    )


def _difference(ctx: CheckContext, a: int, b: int) -> int | None:
    """The root a - b, if it is one."""
    coords = tuple(x - y for x, y in zip(ctx.datum.roots[a], ctx.datum.roots[b], strict=True))
    return ctx.datum.root_index.get(coords)


@register("c-set", AREA, "C_{λ,b,x} = {α ∈ Φ⁺ ∖ Φ_J; μ_x + α∨ ⪯ λ, α∨ is J-anti-dominant and strongly J-minuscule}")
class CSet(Checker):
    """C_{lambda,b,x} agrees with a pairing-by-pairing recount, and sigma preserves its defining conditions."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, b, splus in irreducible_pairs(ctx):
            for x in splus.elements:
                yield pair_inst(ctx, lam, b, x=list(x.cls))

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        datum = ctx.datum
        lam = tuple(inst["lambda"])
        splus, x = pair_member(ctx, inst)
        computed = c_set(splus.levi, lam, x, ctx.congruence)
        levi_pos = datum.positive_roots_of(splus.J)
        short_levi = all(c.series == "G" for c in datum.components) and splus.J == frozenset(
            i for i in range(datum.rank) if datum.is_short_simple(i)
        )
        recount = set()
        for a in range(datum.n_pos):
            if a in levi_pos:
                continue
            pairings = [datum.pair(j, datum.coroots[a]) for j in levi_pos]
            if any(p > 0 or p < -1 for p in pairings):
                continue
            if short_levi and not datum.is_long_root(a):
                continue
            if datum.preceq(add(x.mu, datum.coroots[a]), lam, ctx.congruence):
                recount.add(a)
        if computed != frozenset(recount):
            return False
        for a in computed:
            image = ctx.sigma.root(a)
            flags = datum.classify_coweight(datum.coroots[image], splus.J)
            if image in levi_pos or not (flags.k_antidominant and flags.k_minuscule):
                return False
        return True


@register("omega-orbit", AREA, "ω_𝒪 = Σ_{α ∈ 𝒪} α∨ ∈ π₁(M_J)^σ")
class OmegaOrbit(Checker):
    """omega_O is sigma-fixed, |O| is n, 2n or 3n with n in {d, 2d, 3d}, and types II/III force n = d
    on a simply-laced datum where O ∪ J is a base of Psi."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, b, splus in irreducible_pairs(ctx):
            for orbit in _minuscule_orbits(ctx, splus):
                yield pair_inst(ctx, lam, b, orbit=[list(ctx.datum.roots[a]) for a in orbit])

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        datum = ctx.datum
        splus = ctx.splus(tuple(inst["lambda"]), ctx.parse(inst["b"]))
        orbit = [datum.index_of(a) for a in inst["orbit"]]
        info = _info(ctx, splus, orbit[0])
        if info is None or not info.omega_fixed:
            return False
        d = component_orbit_size(ctx.sigma, orbit[0])
        if info.n not in (d, 2 * d, 3 * d):
            return False
        if info.type is OrbitType.I:
            return True
        return info.n == d and datum.simply_laced and info.union_is_base


@register("type-I", AREA, "there exist γ ∈ 𝒪, 1 ≤ r ≤ n, and x′ ∈ 𝒮⁺_{λ,b} such that x →^{(γ,r)} x′")
class TypeOne(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for lam, b, splus in irreducible_pairs(ctx):
            for x in splus.elements:
                for xi in sorted(c_set(splus.levi, lam, x, ctx.congruence)):
                    info = _info(ctx, splus, xi)
                    if info is not None and info.type is OrbitType.I:
                        yield pair_inst(ctx, lam, b, x=list(x.cls), xi=list(ctx.datum.roots[xi]))

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        lam = tuple(inst["lambda"])
        splus, x = pair_member(ctx, inst)
        xi = ctx.datum.index_of(inst["xi"])
        info = _info(ctx, splus, xi)
        rel = _relation(ctx, lam, splus)
        return any(
            rel.is_arrow(x.cls, rel.target(x.cls, gamma, r), gamma, r)
            for gamma in info.orbit
            for r in range(1, info.n + 1)
        )


class _TypeTwoBase(Checker):
    @staticmethod
    def _orbits(ctx: CheckContext, lam, splus: SPlus) -> Iterator[OrbitInfo]:
        for orbit in _minuscule_orbits(ctx, splus):
            info = _info(ctx, splus, orbit[0])
            if info is None or info.type is not OrbitType.II or not info.vartheta:
                continue
            if _theta_blocked(ctx, lam, splus, info):
                yield info


@register("type-II.1", AREA, "(1) ⟨σ^i(γ), μ_x⟩ = 0, w_x σ^i(γ) = σ^i(γ) for 1 ≤ i ≠ r−n ≤ r−1")
class TypeTwoTail(_TypeTwoBase):
    """For x ↣^{(gamma, r)} x' with n+1 <= r <= 2n-1, clauses (1), (2) and (3) of the long tail."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        datum = ctx.datum
        for lam, b, splus in irreducible_pairs(ctx):
            infos = list(self._orbits(ctx, lam, splus))
            if not infos:
                continue
            rel = _relation(ctx, lam, splus)
            for info in infos:
                for x in splus.elements:
                    for gamma in info.orbit:
                        for r in range(info.n + 1, 2 * info.n):
                            if rel.is_tail(x.cls, rel.target(x.cls, gamma, r), gamma, r):
                                yield pair_inst(ctx, lam, b, x=list(x.cls), gamma=list(datum.roots[gamma]), r=r)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        datum = ctx.datum
        sigma = ctx.sigma
        splus, x = pair_member(ctx, inst)
        gamma = datum.index_of(inst["gamma"])
        r = inst["r"]
        info = _info(ctx, splus, gamma)
        n = info.n
        w = x.rep.w
        for i in range(1, r):
            if i == r - n:
                continue
            root = sigma.root(gamma, i)
            if datum.pair(root, x.mu) != 0 or w.perm[root] != root:
                return False
        shifted = _difference(ctx, info.vartheta[gamma], sigma.root(gamma, n))
        if shifted is None:
            return False
        moved = w.perm[sigma.root(gamma, r - n)]
        if moved != sigma.root(shifted, r - n) or datum.pair(moved, x.mu) != 1:
            return False
        return datum.pair(w.perm[shifted], x.mu) >= 1


class _TypeTwoStuck(_TypeTwoBase):
    """x has no ↣-edge along the orbit of a type II member of C_{lambda,b,x}; some alpha in O then meets
    the clauses up to ``depth``."""

    depth = 2

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        datum = ctx.datum
        for lam, b, splus in irreducible_pairs(ctx):
            infos = list(self._orbits(ctx, lam, splus))
            if not infos:
                continue
            rel = _relation(ctx, lam, splus)
            for x in splus.elements:
                members = c_set(splus.levi, lam, x, ctx.congruence)
                for info in infos:
                    if not members & set(info.orbit):
                        continue
                    if any(
                        rel.is_tail(x.cls, rel.target(x.cls, gamma, r), gamma, r)
                        for gamma in info.orbit
                        for r in range(1, 2 * info.n)
                    ):
                        continue
                    yield pair_inst(ctx, lam, b, x=list(x.cls), orbit=[list(datum.roots[a]) for a in info.orbit])

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        datum = ctx.datum
        splus, x = pair_member(ctx, inst)
        orbit = [datum.index_of(a) for a in inst["orbit"]]
        info = _info(ctx, splus, orbit[0])
        return any(self._meets(ctx, splus, info, x, alpha) for alpha in orbit)

    def _meets(self, ctx: CheckContext, splus: SPlus, info: OrbitInfo, x: Pi1MJElem, alpha: int) -> bool:
        datum = ctx.datum
        sigma = ctx.sigma
        n = info.n
        w = x.rep.w
        for i in range(1, 2 * n):
            if i == n:
                continue
            root = sigma.root(alpha, i)
            if datum.pair(root, x.mu) != 0 or w.perm[root] != root:
                return False
        theta = info.vartheta[alpha]
        if w.perm[sigma.root(alpha, n)] != _difference(ctx, theta, alpha):
            return False
        w_j = ctx.group.W.longest(splus.J)
        if datum.pair(w_j.perm[sigma.root(alpha, n)], x.mu) != 1:
            return False
        if self.depth == 2:
            return True
        moved = w.perm[theta]
        if datum.pair(moved, add(x.mu, datum.coroots[alpha])) < 1:
            return False
        if self.depth == 3:
            return True
        return datum.pair(moved, x.mu) >= 1


@register("type-II.2", AREA, "(2) w_x σⁿ(α) = ϑ_α − α and ⟨w_J σⁿ(α), μ_x⟩ = 1")
class TypeTwoFold(_TypeTwoStuck):
    depth = 2


@register("type-II.3", AREA, "(3) ⟨w_x(ϑ_α), μ_x + α∨⟩ ≥ 1")
class TypeTwoRaised(_TypeTwoStuck):
    depth = 3


@register("type-II.4", AREA, "(4) ⟨w_x(ϑ_α), μ_x⟩ ≥ 1")
class TypeTwoPositive(_TypeTwoStuck):
    depth = 4


# ----------------------------------------------------------------------
# sigma of order 3d (D4 with triality)
# ----------------------------------------------------------------------


def _triality_pairs(ctx: CheckContext) -> list[tuple[int, int, int]]:
    """(alpha, beta, d) with alpha, beta simple, <alpha, beta^vee> = -1, sigma^d(beta) = beta and sigma of order 3d."""
    datum = ctx.datum
    sigma = ctx.sigma
    simple = datum.simple_root_indices
    out = []
    for beta in simple:
        d = component_orbit_size(sigma, beta)
        if sigma.order != 3 * d or sigma.root(beta, d) != beta:
            continue
        for alpha in simple:
            if datum.root_pair_coroot(alpha, beta) == -1:
                out.append((alpha, beta, d))
    return out


def _root_sum(ctx: CheckContext, *roots: int) -> int:
    total = [0] * ctx.datum.rank
    for r in roots:
        total = [a + b for a, b in zip(total, ctx.datum.roots[r], strict=True)]
    return ctx.datum.index_of(total)


class _TrialityBase(Checker):
    """x ->^{(alpha, r)} x' on S^+ with J the sigma-orbit of beta."""

    # r runs from lo * d + lo_shift to hi * d + hi_shift
    r_range: tuple[int, int] = (1, 1)
    lo_shift = 0
    hi_shift = 0

    def _bounds(self, d: int) -> range:
        lo, hi = self.r_range
        return range(lo * d + self.lo_shift, hi * d + self.hi_shift + 1)

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        datum = ctx.datum
        configs = _triality_pairs(ctx)
        if not configs:
            return
        for lam, b, splus in irreducible_pairs(ctx):
            rel = _relation(ctx, lam, splus)
            for alpha, beta, d in configs:
                if splus.J != frozenset(datum.simple_root_indices.index(r) for r in ctx.sigma.root_orbit(beta)):
                    continue
                for x in splus.elements:
                    for r in self._bounds(d):
                        if not rel.is_arrow(x.cls, rel.target(x.cls, alpha, r), alpha, r):
                            continue
                        if self.applies(ctx, x, alpha, beta, d, r):
                            yield pair_inst(
                                ctx,
                                lam,
                                b,
                                x=list(x.cls),
                                alpha=list(datum.roots[alpha]),
                                beta=list(datum.roots[beta]),
                                r=r,
                            )

    def applies(self, ctx: CheckContext, x: Pi1MJElem, alpha: int, beta: int, d: int, r: int) -> bool:
        return True

    @staticmethod
    def _unpack(ctx: CheckContext, inst: Instance):
        datum = ctx.datum
        splus, x = pair_member(ctx, inst)
        alpha = datum.index_of(inst["alpha"])
        beta = datum.index_of(inst["beta"])
        return splus, x, alpha, beta, component_orbit_size(ctx.sigma, beta), inst["r"]

    @staticmethod
    def _admissible_tail(ctx: CheckContext, inst: Instance, x: Pi1MJElem, alpha: int, beta: int, r: int) -> bool:
        """w~_x and w~_x s_{sigma^r(alpha + beta) + 1} lie in Adm(lambda)."""
        adm = ctx.adm(inst["lambda"])
        theta = _root_sum(ctx, alpha, beta)
        return x.rep in adm and ctx.group.compose(x.rep, affine_reflection(ctx, theta, r)) in adm


@register("order3d.small", AREA, "If 1 ≤ r ≤ d, then g I ∼_{λ,b} g y⁻¹ I")
class TrialitySmall(_TrialityBase):
    """When (*) holds for alpha + beta at r = d: <beta, mu_x> = 1, mu_x ± delta^vee ⪯ lambda with
    delta = alpha + beta + sigma^d(alpha) central on J, and s_{delta+1} w~_x, w~_x are admissible."""

    r_range = (0, 1)
    lo_shift = 1

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        datum = ctx.datum
        sigma = ctx.sigma
        splus, x, alpha, beta, d, r = self._unpack(ctx, inst)
        if r < d:
            return True
        gamma = _root_sum(ctx, alpha, beta)
        w = x.rep.w
        twisted = ctx.group.W.act(w, datum.coroots[sigma.root(gamma, d)])
        star = (
            datum.pair(gamma, x.mu) == 1
            and datum.pair(w.perm[sigma.root(gamma, d)], x.mu) == -1
            and datum.pair(gamma, twisted) == -1
        )
        if not star:
            return True
        delta = _root_sum(ctx, alpha, beta, sigma.root(alpha, d))
        lam = tuple(inst["lambda"])
        if datum.pair(beta, x.mu) != 1 or datum.pair(sigma.root(alpha, d), x.mu) != -1:
            return False
        if not all(datum.preceq(add(x.mu, datum.coroots[delta], s), lam, ctx.congruence) for s in (1, -1)):
            return False
        if any(datum.pair(datum.simple_root_indices[j], datum.coroots[delta]) for j in splus.J):
            return False
        adm = ctx.adm(lam)
        return x.rep in adm and ctx.group.compose(affine_reflection(ctx, delta), x.rep) in adm


@register("order3d.large", AREA, "Suppose 2d ≤ r ≤ 3d−1 and the following conditions hold")
class TrialityLarge(_TrialityBase):
    """Under clauses (1)-(4): <alpha + beta, mu_x> >= <beta, mu_x> + 1 when r = 2d, and w~_x s_{sigma^r(alpha+beta)+1}
    is admissible."""

    r_range = (2, 3)
    hi_shift = -1

    def applies(self, ctx: CheckContext, x: Pi1MJElem, alpha: int, beta: int, d: int, r: int) -> bool:
        datum = ctx.datum
        sigma = ctx.sigma
        mu = x.mu
        if datum.pair(alpha, mu) < 1:
            return False
        if r == 2 * d and datum.pair(sigma.root(alpha, d), mu) != 0:
            return False
        special = {r - d, r - 2 * d, d, 2 * d}
        if 2 * d + 1 <= r:
            if datum.pair(sigma.root(beta, r), mu) != 1 or datum.pair(beta, mu) != 0:
                return False
            if any(datum.pair(sigma.root(alpha, i), mu) != 0 for i in special):
                return False
        return all(fixes(ctx, x.rep, sigma.root(alpha, i)) for i in range(1, r) if i not in special)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        datum = ctx.datum
        _, x, alpha, beta, d, r = self._unpack(ctx, inst)
        if r == 2 * d and datum.pair(_root_sum(ctx, alpha, beta), x.mu) < datum.pair(beta, x.mu) + 1:
            return False
        return self._admissible_tail(ctx, inst, x, alpha, beta, r)


@register("order3d.good", AREA, "Assume d+1 ≤ r ≤ 2d−1 and the following conditions hold")
class TrialityGood(_TrialityBase):
    """Under clauses (1)-(3), w~_x s_{sigma^r(alpha+beta)+1} is admissible."""

    r_range = (1, 2)
    lo_shift = 1
    hi_shift = -1

    def applies(self, ctx: CheckContext, x: Pi1MJElem, alpha: int, beta: int, d: int, r: int) -> bool:
        datum = ctx.datum
        sigma = ctx.sigma
        mu = x.mu
        if datum.pair(beta, mu) != 0 or datum.pair(sigma.root(beta, r), mu) not in (0, 1):
            return False
        if datum.pair(sigma.root(alpha, d), mu) != 0 or datum.pair(sigma.root(alpha, r - d), mu) != 0:
            return False
        if datum.pair(alpha, mu) < 1:
            return False
        return all(fixes(ctx, x.rep, sigma.root(alpha, i)) for i in range(1, r) if i not in (r - d, d))

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        _, x, alpha, beta, _, r = self._unpack(ctx, inst)
        return self._admissible_tail(ctx, inst, x, alpha, beta, r)


@register("order3d.central", AREA, "It follows from Lemma type-I by noticing that 𝒪_δ is of type I")
class TrialityCentral(_TrialityBase):
    """x_1 ->^{(delta, k)} x_2 with delta = alpha + beta + sigma^{2d}(alpha): O_delta is of type I."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        datum = ctx.datum
        sigma = ctx.sigma
        configs = _triality_pairs(ctx)
        if not configs:
            return
        for lam, b, splus in irreducible_pairs(ctx):
            rel = _relation(ctx, lam, splus)
            for alpha, beta, d in configs:
                if splus.J != frozenset(datum.simple_root_indices.index(r) for r in sigma.root_orbit(beta)):
                    continue
                delta = _root_sum(ctx, alpha, beta, sigma.root(alpha, 2 * d))
                for x in splus.elements:
                    for k in range(1, 3 * d):
                        if rel.is_arrow(x.cls, rel.target(x.cls, delta, k), delta, k):
                            yield pair_inst(ctx, lam, b, x=list(x.cls), delta=list(datum.roots[delta]), k=k)

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        splus = ctx.splus(tuple(inst["lambda"]), ctx.parse(inst["b"]))
        info = _info(ctx, splus, ctx.datum.index_of(inst["delta"]))
        return info is not None and info.type is OrbitType.I and info.omega_fixed
