"""Adjoint root data: roots by closure, coroots, pairings and coweight predicates.

Coordinates:
  * roots are integer vectors in the basis of simple roots (X = ZPhi);
  * coweights are vectors in the basis of fundamental coweights (Y), so
    ``<alpha_j, mu> = mu[j]`` and ``<alpha, mu> = sum_j alpha[j] * mu[j]``;
  * simple coroot ``alpha_i^vee`` is row ``i`` of the Cartan matrix.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

from sympy import Matrix

from src.errors import NotACoroot, NotARoot, NotDominant, RankTooLarge
from src.rootdata.cartan import MAX_TOTAL_RANK, block_diagonal, cartan_matrix, validate_type, weyl_group_order
from src.rootdata.lattice import IntegerLattice
from src.rootdata.weyl import WeylElem, WeylGroup

logger = logging.getLogger(__name__)

DEFAULT_WEYL_BUDGET = 60_000

IntVec = tuple[int, ...]
Vec = tuple  # exact entries: int or Fraction


@dataclass(frozen=True)
class Component:
    series: str
    rank: int
    offset: int

    @property
    def label(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def indices(self) -> range:
        return range(self.offset, self.offset + self.rank)


class CoweightFlags(NamedTuple):
    k_dominant: bool
    k_antidominant: bool
    k_minuscule: bool
    strongly_k_minuscule: bool


class OrderFlags(NamedTuple):
    leq_cone: bool
    preceq: bool


class LeviData(NamedTuple):
    roots: tuple[int, ...]
    simple: frozenset[int] | None
    projection: Vec | None


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def _inverse_fraction_matrix(rows: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    inv = Matrix([list(r) for r in rows]).inv()
    return tuple(tuple(_to_fraction(inv[i, j]) for j in range(inv.cols)) for i in range(inv.rows))


class RootDatum:
    """Adjoint root datum of a product of simple types."""

    def __init__(self, components: Sequence[tuple[str, int]], weyl_budget: int = DEFAULT_WEYL_BUDGET):
        comps: list[Component] = []
        offset = 0
        for series, rank in components:
            validate_type(series, rank)
            comps.append(Component(series, rank, offset))
            offset += rank
        if not comps:
            raise RankTooLarge("a root datum needs at least one component")
        if offset > MAX_TOTAL_RANK:
            raise RankTooLarge(f"total rank {offset} exceeds {MAX_TOTAL_RANK}")
        order = 1
        for c in comps:
            order *= weyl_group_order(c.series, c.rank)
        if order > weyl_budget:
            raise RankTooLarge(f"|W0| = {order} exceeds the enumeration budget {weyl_budget}")

        self.components: tuple[Component, ...] = tuple(comps)
        self.rank = offset
        self.label = "x".join(c.label for c in comps)
        self.cartan = block_diagonal([cartan_matrix(c.series, c.rank) for c in comps])
        self.weyl_order = order
        self._levi_cache: dict[frozenset[int], tuple[int, ...]] = {}
        self._projection_cache: dict[tuple[int, ...], tuple[tuple[Fraction, ...], ...]] = {}
        self._build_roots()
        self.weyl = WeylGroup(self, budget=weyl_budget)
        logger.debug("built root datum %s: |Phi+|=%d |W0|=%d", self.label, self.n_pos, len(self.weyl))

    # ------------------------------------------------------------------
    # Roots
    # ------------------------------------------------------------------

    def _build_roots(self) -> None:
        n = self.rank
        cartan = self.cartan
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        found: dict[IntVec, IntVec] = {simple[i]: cartan[i] for i in range(n)}
        frontier = list(found)
        while frontier:
            nxt = []
            for root in frontier:
                coroot = found[root]
                for i in range(n):
                    c = sum(root[j] * cartan[i][j] for j in range(n))
                    if c == 0:
                        continue
                    image = tuple(root[k] - (c if k == i else 0) for k in range(n))
                    if image in found:
                        continue
                    d = coroot[i]
                    found[image] = tuple(coroot[k] - d * cartan[i][k] for k in range(n))
                    nxt.append(image)
            frontier = nxt

        positives = sorted((r for r in found if all(x >= 0 for x in r)), key=lambda r: (sum(r), r))
        self.n_pos = len(positives)
        roots = positives + [tuple(-x for x in r) for r in positives]
        self.roots: tuple[IntVec, ...] = tuple(roots)
        self.coroots: tuple[IntVec, ...] = tuple(found[r] for r in roots)
        self.root_index: dict[IntVec, int] = {r: i for i, r in enumerate(roots)}
        self.coroot_index: dict[IntVec, int] = {c: i for i, c in enumerate(self.coroots)}
        self.simple_root_indices: tuple[int, ...] = tuple(self.root_index[s] for s in simple)
        self._reflection_perms = tuple(
            tuple(self.root_index[self._reflect_root(i, r)] for r in roots) for i in range(n)
        )

    def _reflect_root(self, i: int, root: IntVec) -> IntVec:
        c = sum(root[j] * self.cartan[i][j] for j in range(self.rank))
        return tuple(root[k] - (c if k == i else 0) for k in range(self.rank))

    def reflection_perm(self, i: int) -> tuple[int, ...]:
        return self._reflection_perms[i]

    def negate(self, r: int) -> int:
        return (r + self.n_pos) % (2 * self.n_pos)

    def is_positive(self, r: int) -> bool:
        return r < self.n_pos

    def index_of(self, root: Sequence[int]) -> int:
        try:
            return self.root_index[tuple(root)]
        except KeyError:
            raise NotARoot(f"{tuple(root)} is not a root of {self.label}") from None

    def component_of_root(self, r: int) -> int:
        support = [k for k, x in enumerate(self.roots[r]) if x]
        for ci, comp in enumerate(self.components):
            if support[0] in comp.indices:
                return ci
        raise AssertionError("root with empty support")

    def component_of_simple(self, i: int) -> int:
        return next(ci for ci, comp in enumerate(self.components) if i in comp.indices)

    def height(self, r: int) -> int:
        return sum(self.roots[r])

    @cached_property
    def highest_roots(self) -> tuple[int, ...]:
        """Index of the highest root of each component."""
        out = []
        for ci in range(len(self.components)):
            pos = [r for r in range(self.n_pos) if self.component_of_root(r) == ci]
            out.append(max(pos, key=self.height))
        return tuple(out)

    @cached_property
    def two_rho(self) -> IntVec:
        """Sum of positive roots in simple-root coordinates."""
        return tuple(sum(self.roots[r][k] for r in range(self.n_pos)) for k in range(self.rank))

    def positive_roots_of(self, subset: Iterable[int]) -> tuple[int, ...]:
        """Phi_K^+ for K a set of simple indices."""
        k = frozenset(subset)
        return self._positive_roots_of(k)

    def _positive_roots_of(self, k: frozenset[int]) -> tuple[int, ...]:
        hit = self._levi_cache.get(k)
        if hit is None:
            hit = tuple(r for r in range(self.n_pos) if all(x == 0 or j in k for j, x in enumerate(self.roots[r])))
            self._levi_cache[k] = hit
        return hit

    def roots_of(self, subset: Iterable[int]) -> tuple[int, ...]:
        pos = self.positive_roots_of(subset)
        return pos + tuple(self.negate(r) for r in pos)

    # ------------------------------------------------------------------
    # Pairings and reflections on coweights
    # ------------------------------------------------------------------

    def pair(self, r: int, v: Sequence) -> int | Fraction:
        """<alpha_r, v>."""
        return sum(a * x for a, x in zip(self.roots[r], v, strict=True) if a)

    def pair_vec(self, root: Sequence[int], v: Sequence) -> int | Fraction:
        return sum(a * x for a, x in zip(root, v, strict=True) if a)

    def root_pair_coroot(self, r: int, s: int) -> int:
        """<alpha_r, alpha_s^vee>."""
        return self.pair(r, self.coroots[s])

    def reflect(self, alpha: int | Sequence[int], v: Sequence) -> Vec:
        r = alpha if isinstance(alpha, int) else self.index_of(alpha)
        if not 0 <= r < len(self.roots):
            raise NotARoot(f"root index {r} out of range")
        c = self.pair(r, v)
        if c == 0:
            return tuple(v)
        return tuple(x - c * y for x, y in zip(v, self.coroots[r], strict=True))

    def simple_reflect(self, i: int, v: Sequence) -> Vec:
        c = v[i]
        if c == 0:
            return tuple(v)
        return tuple(x - c * y for x, y in zip(v, self.cartan[i], strict=True))

    def is_dominant(self, v: Sequence) -> bool:
        return all(x >= 0 for x in v)

    def is_central(self, v: Sequence) -> bool:
        return not any(v)

    def dominant_conjugate(self, v: Sequence) -> tuple[Vec, WeylElem]:
        """(v_bar, z) with z of minimal length and z(v) = v_bar dominant."""
        cur = tuple(v)
        word: list[int] = []
        while True:
            i = next((i for i, x in enumerate(cur) if x < 0), None)
            if i is None:
                break
            cur = self.simple_reflect(i, cur)
            word.append(i)
        z = self.weyl.from_word(reversed(word))
        return cur, z

    # ------------------------------------------------------------------
    # Coroot coordinates and orders
    # ------------------------------------------------------------------

    @cached_property
    def _to_simple_coroots(self) -> tuple[tuple[Fraction, ...], ...]:
        transpose = [[self.cartan[j][i] for j in range(self.rank)] for i in range(self.rank)]
        return _inverse_fraction_matrix(transpose)

    def simple_coroot_coords(self, v: Sequence) -> tuple[Fraction, ...]:
        """c with v = sum_i c_i alpha_i^vee."""
        return tuple(sum((m * x for m, x in zip(row, v, strict=True)), Fraction(0)) for row in self._to_simple_coroots)

    def coroot_height(self, v: Sequence) -> Fraction:
        return sum(self.simple_coroot_coords(v), Fraction(0))

    @cached_property
    def coroot_lattice(self) -> IntegerLattice:
        return IntegerLattice(self.cartan, self.rank)

    def in_coroot_lattice(self, v: Sequence[int]) -> bool:
        return self.coroot_lattice.contains(v)

    def leq_cone(self, smaller: Sequence, larger: Sequence) -> bool:
        """smaller <= larger: larger - smaller is a nonnegative combination of simple coroots."""
        diff = tuple(b - a for a, b in zip(smaller, larger, strict=True))
        return all(c >= 0 for c in self.simple_coroot_coords(diff))

    def preceq(self, mu: Sequence, lam: Sequence, congruence: bool = True) -> bool:
        """mu ⪯ lam: dominant conjugate of mu below lam, and (optionally) lam - mu in ZPhi^vee."""
        mu_bar, _ = self.dominant_conjugate(mu)
        if not self.leq_cone(mu_bar, lam):
            return False
        if not congruence:
            return True
        diff = tuple(b - a for a, b in zip(mu, lam, strict=True))
        if any(isinstance(x, Fraction) and x.denominator != 1 for x in diff):
            return False
        return self.in_coroot_lattice(tuple(int(x) for x in diff))

    def order_relations(self, v: Sequence, v_prime: Sequence, lam: Sequence, congruence: bool = True) -> OrderFlags:
        """Flags (v' <= v, v' ⪯ lam)."""
        return OrderFlags(self.leq_cone(v_prime, v), self.preceq(v_prime, lam, congruence))

    # ------------------------------------------------------------------
    # Coweight predicates relative to K
    # ------------------------------------------------------------------

    def classify_coweight(self, mu: Sequence, subset: Iterable[int], require_coroot: bool = False) -> CoweightFlags:
        k = frozenset(subset)
        pairings = [self.pair(r, mu) for r in self._positive_roots_of(k)]
        dominant = all(p >= 0 for p in pairings)
        antidominant = all(p <= 0 for p in pairings)
        minuscule = all(p in (-1, 0, 1) for p in pairings)

        r = self.coroot_index.get(tuple(mu))
        is_outside_coroot = r is not None and self.is_positive(r) and r not in self._positive_roots_of(k)
        if not is_outside_coroot:
            if require_coroot:
                raise NotACoroot(f"{tuple(mu)} is not the coroot of a root in Phi+ minus Phi_K")
            return CoweightFlags(dominant, antidominant, minuscule, False)
        strongly = minuscule
        if strongly and self._g2_short_subset(k):
            strongly = self.is_long_root(r)
        return CoweightFlags(dominant, antidominant, minuscule, strongly)

    def _g2_short_subset(self, k: frozenset[int]) -> bool:
        if not all(c.series == "G" for c in self.components):
            return False
        return k == frozenset(i for i in range(self.rank) if self.is_short_simple(i))

    # ------------------------------------------------------------------
    # Invariant form (short coroots of squared length 2 per component)
    # ------------------------------------------------------------------

    @cached_property
    def coroot_scale(self) -> tuple[Fraction, ...]:
        """d_i = |alpha_i^vee|^2 / 2."""
        d: list[Fraction | None] = [None] * self.rank
        for comp in self.components:
            d[comp.offset] = Fraction(1)
            stack = [comp.offset]
            while stack:
                i = stack.pop()
                for j in comp.indices:
                    if j != i and self.cartan[i][j] and d[j] is None:
                        d[j] = d[i] * self.cartan[j][i] / self.cartan[i][j]
                        stack.append(j)
            low = min(d[j] for j in comp.indices)
            for j in comp.indices:
                d[j] = d[j] / low
        return tuple(d)

    @cached_property
    def inner_product(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix of the fundamental coweights: D (C^T)^{-1}."""
        inv_t = self._to_simple_coroots
        return tuple(tuple(self.coroot_scale[i] * inv_t[i][j] for j in range(self.rank)) for i in range(self.rank))

    def form(self, u: Sequence, v: Sequence) -> Fraction:
        g = self.inner_product
        return sum((u[i] * g[i][j] * v[j] for i in range(self.rank) for j in range(self.rank) if u[i] and v[j]), Fraction(0))

    def coroot_norm(self, r: int) -> Fraction:
        return self.form(self.coroots[r], self.coroots[r])

    def is_short_simple(self, i: int) -> bool:
        comp = self.components[self.component_of_simple(i)]
        scales = [self.coroot_scale[j] for j in comp.indices]
        return len(set(scales)) > 1 and self.coroot_scale[i] == max(scales)

    def is_long_root(self, r: int) -> bool:
        """Long roots have the short coroots."""
        comp = self.component_of_root(r)
        norms = {self.coroot_norm(s) for s in range(self.n_pos) if self.component_of_root(s) == comp}
        return self.coroot_norm(r) == min(norms)

    @cached_property
    def simply_laced(self) -> bool:
        return all(c.series in ("A", "D", "E") for c in self.components)

    # ------------------------------------------------------------------
    # Levi subsystems and projections
    # ------------------------------------------------------------------

    def roots_orthogonal_to(self, v: Sequence) -> tuple[int, ...]:
        """Phi_v."""
        return tuple(r for r in range(len(self.roots)) if self.pair(r, v) == 0)

    def stabilizer_simple(self, v: Sequence) -> frozenset[int]:
        """J_v for dominant v."""
        if not self.is_dominant(v):
            raise NotDominant(f"{tuple(v)} is not dominant")
        return frozenset(i for i, x in enumerate(v) if x == 0)

    def project(self, subset: Iterable[int], v: Sequence) -> tuple[Fraction, ...]:
        """Orthogonal projection of v onto the complement of the span of Phi_K^vee."""
        k = sorted(set(subset))
        if not k:
            return tuple(Fraction(x) for x in v)
        inv = self._projection_inverse(tuple(k))
        rhs = [v[j] for j in k]
        coeffs = [sum((inv[a][b] * rhs[b] for b in range(len(k))), Fraction(0)) for a in range(len(k))]
        out = [Fraction(x) for x in v]
        for c, i in zip(coeffs, k, strict=True):
            if c:
                row = self.cartan[i]
                out = [x - c * y for x, y in zip(out, row, strict=True)]
        return tuple(out)

    def connected_parts(self, subset: Iterable[int]) -> tuple[frozenset[int], ...]:
        """Connected components of the Dynkin subdiagram on K, ordered by smallest member."""
        left = set(subset)
        out = []
        while left:
            seed = min(left)
            part = {seed}
            stack = [seed]
            while stack:
                i = stack.pop()
                for j in list(left - part):
                    if self.cartan[i][j]:
                        part.add(j)
                        stack.append(j)
            left -= part
            out.append(frozenset(part))
        return tuple(out)

    def highest_root_of(self, subset: Iterable[int]) -> int:
        """Highest root of a connected K."""
        return max(self.positive_roots_of(subset), key=lambda r: (self.height(r), r))

    def solve_on_levi(self, subset: Iterable[int], target: Sequence) -> dict[int, Fraction]:
        """Coefficients c_j (j in K) with sum_j c_j <alpha_i, alpha_j^vee> = target_i for i in K."""
        k = tuple(sorted(set(subset)))
        if not k:
            return {}
        inv = self._projection_inverse(k)
        rhs = [Fraction(target[i]) for i in k]
        return {j: sum((inv[a][b] * rhs[b] for b in range(len(k))), Fraction(0)) for a, j in enumerate(k)}

    def _projection_inverse(self, k: tuple[int, ...]) -> tuple[tuple[Fraction, ...], ...]:
        hit = self._projection_cache.get(k)
        if hit is None:
            # rows j, columns i: <alpha_j, alpha_i^vee> = cartan[i][j]
            hit = _inverse_fraction_matrix([[self.cartan[i][j] for i in k] for j in k])
            self._projection_cache[k] = hit
        return hit

    def levi_and_projection(self, arg: Sequence | Iterable[int], v: Sequence | None = None) -> LeviData:
        """Phi_v and J_v for a coweight, or Phi_K and pr_K(v) for a subset K of simple indices."""
        if isinstance(arg, (set, frozenset)):
            k = frozenset(arg)
            return LeviData(self.roots_of(k), k, self.project(k, v) if v is not None else None)
        roots = self.roots_orthogonal_to(arg)
        simple = self.stabilizer_simple(arg) if self.is_dominant(arg) else None
        return LeviData(roots, simple, None)

    # ------------------------------------------------------------------
    # Coweight enumeration
    # ------------------------------------------------------------------

    def dominant_coweights(self, bound: int) -> Iterator[IntVec]:
        """Dominant integral mu with <2rho, mu> <= bound."""
        weights = self.two_rho

        def walk(i: int, budget: int, prefix: list[int]) -> Iterator[IntVec]:
            if i == self.rank:
                yield tuple(prefix)
                return
            for x in range(budget // weights[i] + 1):
                prefix.append(x)
                yield from walk(i + 1, budget - x * weights[i], prefix)
                prefix.pop()

        yield from walk(0, bound, [])

    def dominant_up_to_height(self, max_height: int | Fraction) -> list[IntVec]:
        """Nonzero dominant coweights of coroot-height <= max_height, sorted by (height, coords)."""
        limit = int(2 * Fraction(max_height))
        out = [mu for mu in self.dominant_coweights(limit) if any(mu) and self.coroot_height(mu) <= max_height]
        return sorted(out, key=lambda mu: (self.coroot_height(mu), mu))

    def saturation(self, lam: Sequence[int], congruence: bool = True) -> frozenset[IntVec]:
        """{mu in Y : mu ⪯ lam} as a union of W0-orbits of dominant coweights below lam."""
        if not self.is_dominant(lam):
            raise NotDominant(f"{tuple(lam)} is not dominant")
        bound = sum(w * x for w, x in zip(self.two_rho, lam, strict=True))
        out: set[IntVec] = set()
        for mu in self.dominant_coweights(bound):
            if not self.leq_cone(mu, lam):
                continue
            if congruence and not self.in_coroot_lattice(tuple(a - b for a, b in zip(lam, mu, strict=True))):
                continue
            out |= self.weyl.orbit(mu)
        return frozenset(out)

    def __repr__(self) -> str:
        return f"RootDatum({self.label})"
