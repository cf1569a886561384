"""Partial conjugation, K-minimal elements and semi-standard elements."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from functools import lru_cache

from src.affine.element import AffRoot, ExtAffElem
from src.components.leaves import full_scan
from src.errors import PlateauExhausted
from src.lab.context import CheckContext
from src.lab.instances import nonempty_pairs, semi_standard_ball
from src.lab.registry import Checker, Instance, register
from src.sigma.conjugation import (
    MoveKind,
    conjugacy_class,
    is_k_minimal,
    k_minimal_in_class,
    move_graph,
    partial_conjugation,
    sigma_conjugate,
    stable_subset,
)

AREA = "conjugation"
SHORT_RADIUS = 2


@lru_cache(maxsize=16)
def _short(group) -> tuple[ExtAffElem, ...]:
    return tuple(group.ball(SHORT_RADIUS))


def _preserves_positive(ctx: CheckContext, z: ExtAffElem, nu) -> bool:
    """z sends the positive affine roots of Phi_nu to positive affine roots.

    Raising the level only helps, so the floor roots (alpha, 1), alpha > 0, and
    (alpha, 0), alpha < 0, decide it.
    """
    g = ctx.group
    datum = ctx.datum
    for r in range(len(datum.roots)):
        if datum.pair(r, nu) != 0:
            continue
        floor = AffRoot(r, 1 if datum.is_positive(r) else 0)
        if not g.is_positive_affroot(g.act_on_affroot(z, floor)):
            return False
    return True


def _finite_families(ctx: CheckContext) -> list[frozenset[str]]:
    return [k for k in ctx.k_families if k <= ctx.s0]


def _has_cycle(graph: dict[ExtAffElem, list[tuple[str, ExtAffElem]]]) -> bool:
    indegree = dict.fromkeys(graph, 0)
    for edges in graph.values():
        for _, z in edges:
            indegree[z] += 1
    queue = deque(y for y, d in indegree.items() if d == 0)
    removed = 0
    while queue:
        y = queue.popleft()
        removed += 1
        for _, z in graph[y]:
            indegree[z] -= 1
            if indegree[z] == 0:
                queue.append(z)
    return removed != len(graph)


@register("K-min.1", AREA, "(1) if w̃ < w̃ s with s ∈ 𝕊^a, then either w̃ s ∈ ^K W̃ or w̃ s = s′ w̃ for some s′ ∈ K")
class KMinimalStep(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        g = ctx.group
        for k in ctx.k_families:
            for w in ctx.ball:
                if not is_k_minimal(g, w, k):
                    continue
                for s in g.simple_reflections:
                    if g.length(g.compose(w, s.elem)) > g.length(w):
                        yield {"K": sorted(k), "w": ctx.fmt(w), "s": s.label}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        w = ctx.parse(inst["w"])
        ws = g.compose(w, g.simple(inst["s"]).elem)
        if is_k_minimal(g, ws, inst["K"]):
            return True
        return any(g.compose(g.simple(label).elem, w) == ws for label in inst["K"])


@register("K-min.2", AREA, "(2) w̃ is the unique element of its W_K-σ-conjugacy class which lies in ^K W̃")
class KMinimalUnique(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for k in ctx.k_families:
            for w in ctx.ball:
                if is_k_minimal(ctx.group, w, k):
                    yield {"K": sorted(k), "w": ctx.fmt(w)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        w = ctx.parse(inst["w"])
        return k_minimal_in_class(ctx.sigma, w, inst["K"], ctx.cfg.class_budget) == [w]


@register("partial-conj", AREA, "there exist x ∈ ^K W̃ and u ∈ I(x, K) such that w̃ →_K u x")
class PartialConj(Checker):
    """The reduction ends at u x as stated, and x does not change under one sigma-conjugation by K."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for k in ctx.k_families:
            for w in ctx.ball:
                yield {"K": sorted(k), "w": ctx.fmt(w)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        sigma = ctx.sigma
        budget = ctx.cfg.class_budget
        k = frozenset(inst["K"])
        w = ctx.parse(inst["w"])
        try:
            pc = partial_conjugation(sigma, w, k, budget)
        except PlateauExhausted:
            return False
        if not is_k_minimal(g, pc.x, k) or pc.end != g.compose(pc.u, pc.x):
            return False
        if pc.u not in set(ctx.parabolic(stable_subset(sigma, pc.x, k))):
            return False
        for label in sorted(k):
            neighbour = sigma_conjugate(sigma, g.simple(label).elem, w)
            if partial_conjugation(sigma, neighbour, k, budget).x != pc.x:
                return False
        return True


@register("semi.1", AREA, "(1) z w̃ σ(z)⁻¹ ∈ 𝒮 if z ∈ W̃ such that z(Φ̃⁺_{ν_w̃}) ⊆ Φ̃⁺")
class SemiConjugate(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for w in semi_standard_ball(ctx):
            nu = ctx.newton(w).nu
            for z in _short(ctx.group):
                if _preserves_positive(ctx, z, nu):
                    yield {"w": ctx.fmt(w), "z": ctx.fmt(z)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        y = sigma_conjugate(ctx.sigma, ctx.parse(inst["z"]), ctx.parse(inst["w"]))
        return ctx.is_semi(y)


@register("semi.2", AREA, "(2) there exists a unique pair (w̃′, z′) ∈ 𝒮⁺ × W_0^{J_ν̄} such that w̃ = z′ w̃′ σ(z′)⁻¹")
class SemiStandardPair(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for w in semi_standard_ball(ctx):
            yield {"w": ctx.fmt(w)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        w = ctx.parse(inst["w"])
        J = ctx.datum.stabilizer_simple(ctx.newton(w).newton)
        found = 0
        for z in g.W.min_right_coset_reps(J):
            y = sigma_conjugate(ctx.sigma, g.finite(g.W.inv(z)), w)
            if ctx.semi(y).standard:
                found += 1
        return found == 1


@register("semi.3", AREA, "(3) s w̃ σ(s)⁻¹ ∈ 𝒮 if s ∈ 𝕊^a and either s w̃ < w̃ or w̃ σ(s) < w̃")
class SemiSimpleMove(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        g = ctx.group
        for w in semi_standard_ball(ctx):
            for s in g.simple_reflections:
                if g.is_left_descent(w, s) or g.is_right_descent(w, ctx.sigma.simple(s)):
                    yield {"w": ctx.fmt(w), "s": s.label}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        s = ctx.group.simple(inst["s"]).elem
        return ctx.is_semi(sigma_conjugate(ctx.sigma, s, ctx.parse(inst["w"])))


@register("semi.4", AREA, "(4) 𝕁_w̃ is generated by I ∩ 𝕁_w̃ and W̃ ∩ 𝕁_w̃")
class SemiCentralizer(Checker):
    """Only the W~ ∩ J_w generators are visible at the Weyl-group level.

    Every short y with y w sigma(y)^-1 = w has p(y) fixing nu_w; when nu_w is
    dominant p(y) lies in the standard parabolic W_{J_nu}. The I ∩ J_w
    generators are not modelled.
    """

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for w in semi_standard_ball(ctx):
            for y in _short(ctx.group):
                if sigma_conjugate(ctx.sigma, y, w) == w:
                    yield {"w": ctx.fmt(w), "y": ctx.fmt(y)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        datum = ctx.datum
        W = ctx.group.W
        nu = ctx.newton(ctx.parse(inst["w"])).nu
        y = ctx.parse(inst["y"])
        if tuple(W.act(y.w, nu)) != tuple(nu):
            return False
        if not datum.is_dominant(nu):
            return True
        return W.support(y.w) <= datum.stabilizer_simple(nu)


@register("finite-seq", AREA, "There is no infinite sequence w̃ = w̃_0 ⇀_{s_0} w̃_1 ⇀_{s_1} ⋯")
class FiniteSequence(Checker):
    """The ⇀_K graph from a semi-standard w is acyclic and reaches ^K W~."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        families = _finite_families(ctx)
        for w in semi_standard_ball(ctx):
            for k in families:
                yield {"K": sorted(k), "w": ctx.fmt(w)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        k = inst["K"]
        graph = move_graph(ctx.sigma, ctx.parse(inst["w"]), k, MoveKind.HALFARROW, ctx.cfg.class_budget)
        if _has_cycle(graph):
            return False
        return any(is_k_minimal(ctx.group, y, k) for y in graph)


def arrow_closure(ctx: CheckContext, w: ExtAffElem) -> set[ExtAffElem]:
    """Everything reachable from w by ⇒_R steps, R running over the sigma-orbits of S0."""
    g = ctx.group
    seen = {w}
    queue = deque([w])
    while queue:
        y = queue.popleft()
        for orbit in ctx.orbits:
            for z in conjugacy_class(ctx.sigma, y, orbit, ctx.cfg.class_budget):
                if z not in seen and is_k_minimal(g, z, orbit) and ctx.is_semi(z):
                    seen.add(z)
                    queue.append(z)
    return seen


@register("Left", AREA, "Then w̃ ⇒ w̃′, where w̃′ ∈ ^{S₀} W̃ is the unique element in the W_0-σ-conjugacy class of w̃")
class LeftReduction(Checker):
    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        for w in semi_standard_ball(ctx):
            yield {"w": ctx.fmt(w)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        w = ctx.parse(inst["w"])
        targets = k_minimal_in_class(ctx.sigma, w, ctx.s0, ctx.cfg.class_budget)
        if len(targets) != 1:
            return False
        reached = {y for y in arrow_closure(ctx, w) if is_k_minimal(ctx.group, y, ctx.s0)}
        return reached == {targets[0]}


@register("unique", AREA, "there exists a unique semi-standard element w̃′ ∈ ^K W̃ which is σ-conjugate to w̃ by W_K")
class UniqueSemiStandard(Checker):
    """For K = S0 and (lambda, b) irreducible, the admissible w' is also not left R-distinct for any sigma-orbit R."""

    def instances(self, ctx: CheckContext) -> Iterator[Instance]:
        families = _finite_families(ctx)
        for lam, b, _ in nonempty_pairs(ctx):
            for w in sorted(full_scan(ctx.sigma, ctx.adm(lam), b), key=ctx.fmt):
                for k in families:
                    yield {"lambda": list(lam), "b": ctx.fmt(b), "K": sorted(k), "w": ctx.fmt(w)}

    def holds(self, ctx: CheckContext, inst: Instance) -> bool:
        g = ctx.group
        k = frozenset(inst["K"])
        w = ctx.parse(inst["w"])
        found = [y for y in conjugacy_class(ctx.sigma, w, k, ctx.cfg.class_budget) if is_k_minimal(g, y, k) and ctx.is_semi(y)]
        if len(found) != 1:
            return False
        if k != ctx.s0 or not ctx.hn(tuple(inst["lambda"]), ctx.parse(inst["b"])).irreducible:
            return True
        adm = ctx.adm(inst["lambda"])
        y = found[0]
        if y not in adm:
            return True
        return not any(all(g.compose(s.elem, y) not in adm for s in ctx.refl(orbit)) for orbit in ctx.orbits)
