"""The standard Levi M_J attached to b, the length-zero elements w~_x of Omega_{M_J}.

J is a frozenset of simple indices.  pi_1(M_J) = Y / ZPhi_J^vee is held as
canonical representatives of an ``IntegerLattice``; it is infinite as soon as
J is a proper subset of S0, so classes are only ever produced from explicit
coweights.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from src.affine.element import ExtAffElem
from src.errors import AdlvError, NormalizationFailed
from src.rootdata.lattice import IntegerLattice
from src.sigma.conjugation import sigma_conjugate
from src.sigma.frobenius import Frobenius
from src.sigma.newton import kappa_levi, newton_point

logger = logging.getLogger(__name__)

IntVec = tuple[int, ...]
Subset = frozenset[int]


@dataclass(frozen=True)
class Pi1MJElem:
    J: Subset
    cls: IntVec
    rep: ExtAffElem

    @property
    def mu(self) -> IntVec:
        return self.rep.mu

    def to_json(self) -> dict:
        return {"cls": list(self.cls), "mu": list(self.rep.mu), "w": list(self.rep.w.word)}


@dataclass(frozen=True)
class Normalized:
    J: Subset
    b: ExtAffElem
    nu: tuple
    conjugator: ExtAffElem


@dataclass(frozen=True)
class CentralParts:
    per_x: dict[IntVec, tuple[Subset, Subset]]
    J0: Subset
    J1: Subset


def in_levi(sigma: Frobenius, x: ExtAffElem, J: Subset, nu: Sequence) -> bool:
    """x lies in W~_{M_J} and its Newton vector, computed there, is nu."""
    if not sigma.group.W.support(x.w) <= J:
        return False
    return tuple(newton_point(sigma, x).nu) == tuple(nu)


def levi_J_and_normalize(sigma: Frobenius, b: ExtAffElem, radius: int | None = None) -> Normalized:
    """J = J_{nu_G(b)} and a sigma-conjugate of b inside W~_{M_J} with nu_{M_J} = nu_G(b).

    The minimal z in W0 making nu_b dominant almost always does it; otherwise a
    breadth-first search over s b sigma(s) runs up to *radius* steps.
    """
    grp = sigma.group
    datum = grp.datum
    nk = newton_point(sigma, b)
    nu_bar, z = datum.dominant_conjugate(nk.nu)
    J = datum.stabilizer_simple(nu_bar)
    g = grp.finite(z)
    first = sigma_conjugate(sigma, g, b)
    if in_levi(sigma, first, J, nu_bar):
        return Normalized(J, first, tuple(nu_bar), g)

    if radius is None:
        radius = 2 * grp.length(b) + 4
    logger.debug("direct normalization of %s failed, searching radius %d", b, radius)
    seen = {first: g}
    frontier = deque([(first, g, 0)])
    while frontier:
        y, conj, depth = frontier.popleft()
        if depth >= radius:
            continue
        for s in grp.simple_reflections:
            z_elem = sigma_conjugate(sigma, s.elem, y)
            if z_elem in seen:
                continue
            total = grp.compose(s.elem, conj)
            seen[z_elem] = total
            if in_levi(sigma, z_elem, J, nu_bar):
                return Normalized(J, z_elem, tuple(nu_bar), total)
            frontier.append((z_elem, total, depth + 1))
    raise NormalizationFailed(f"no M_J-representative of {b} within radius {radius}")


class LeviData:
    """pi_1(M_J), the representatives w~_x and kappa_{M_J} for one (sigma, J)."""

    def __init__(self, sigma: Frobenius, J: Iterable[int]):
        self.sigma = sigma
        self.group = sigma.group
        self.datum = sigma.datum
        self.J: Subset = frozenset(J)
        self.lattice = IntegerLattice([self.datum.cartan[j] for j in sorted(self.J)], self.datum.rank)
        self._reps: dict[IntVec, Pi1MJElem] = {}

    @cached_property
    def parts(self) -> tuple[Subset, ...]:
        return self.datum.connected_parts(self.J)

    @cached_property
    def weyl_j(self):
        return self.group.W.parabolic(self.J)

    @cached_property
    def positive_j(self) -> tuple[int, ...]:
        return self.datum.positive_roots_of(self.J)

    def class_of(self, mu: Sequence[int]) -> IntVec:
        return self.lattice.reduce(tuple(int(c) for c in mu))

    def kappa(self, mu: Sequence[int]) -> IntVec:
        return kappa_levi(self.sigma, self.J, mu)

    def add(self, a: Sequence[int], b: Sequence[int]) -> IntVec:
        return self.class_of(tuple(x + y for x, y in zip(a, b, strict=True)))

    def levi_length(self, x: ExtAffElem) -> int:
        """Length of x in W~_{M_J}, for x with finite part in W_J."""
        datum = self.datum
        total = 0
        for r in self.positive_j:
            image = x.w.perm[r]
            c = datum.pair(image, x.mu) + (0 if datum.is_positive(image) else 1)
            total += abs(c)
        return int(total)

    def minuscule_mu(self, v: Sequence[int]) -> IntVec:
        """The J-dominant J-minuscule coweight of v + ZPhi_J^vee."""
        datum = self.datum
        mu = [int(c) for c in v]
        for part in self.parts:
            theta = datum.roots[datum.highest_root_of(part)]
            candidates = [None] + [i for i in sorted(part) if theta[i] == 1]
            for cand in candidates:
                target = [0] * datum.rank
                if cand is not None:
                    target[cand] = 1
                coeffs = datum.solve_on_levi(part, [t - m for t, m in zip(target, mu, strict=True)])
                if all(c.denominator == 1 for c in coeffs.values()):
                    for j, c in coeffs.items():
                        if c:
                            mu = [m + int(c) * a for m, a in zip(mu, datum.cartan[j], strict=True)]
                    break
            else:
                raise AdlvError(f"no minuscule representative of {tuple(v)} on {sorted(part)}")
        return tuple(mu)

    def omega_rep(self, v: Sequence[int]) -> Pi1MJElem:
        """w~_x = t^{mu_x} w_x, the length-zero element of W~_{M_J} in the class of v."""
        cls = self.class_of(v)
        hit = self._reps.get(cls)
        if hit is not None:
            return hit
        mu = self.minuscule_mu(cls)
        rep = None
        for w in self.weyl_j:
            cand = self.group.elem(mu, w)
            if self.levi_length(cand) == 0:
                rep = cand
                break
        if rep is None:
            raise AdlvError(f"no length-zero element of W~_(M_J) over {mu}")
        out = Pi1MJElem(self.J, cls, rep)
        self._reps[cls] = out
        return out

    def central_parts(self, xs: Iterable[Pi1MJElem]) -> CentralParts:
        """J_{x,0}: components of J on which every sigma^i(mu_x) is central; J_{x,1} the rest."""
        per_x = {}
        j1: set[int] = set()
        for x in xs:
            translates = [self.sigma.coweight(x.mu, i) for i in range(self.sigma.order)]
            zero: set[int] = set()
            for part in self.parts:
                if all(t[j] == 0 for t in translates for j in part):
                    zero |= part
            per_x[x.cls] = (frozenset(zero), self.J - zero)
            j1 |= self.J - zero
        return CentralParts(per_x, self.J - frozenset(j1), frozenset(j1))


def j0_j1(levi: LeviData, xs: Iterable[Pi1MJElem]) -> CentralParts:
    return levi.central_parts(xs)
