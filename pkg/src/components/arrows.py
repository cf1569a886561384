"""The arrow relations x ->^{(gamma, r)} x' and x ↣^{(gamma, r)} x' on S^+_{lambda,b}.

x -> x' when x' - x = sigma^r(gamma^vee) - gamma^vee in pi_1(M_J) and both
mu_{x - gamma^vee} and mu_{x + sigma^r(gamma^vee)} are ⪯ lambda.  The tail
relation ↣ drops arrows that factor through an intermediate sigma-twist.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from src.components.leaves import SPlus
from src.components.levi import LeviData
from src.sigma.frobenius import Frobenius

logger = logging.getLogger(__name__)

IntVec = tuple[int, ...]


@dataclass(frozen=True, order=True)
class ArrowEdge:
    x: IntVec
    x2: IntVec
    gamma: int
    r: int

    def to_json(self) -> dict:
        return {"x": list(self.x), "x2": list(self.x2), "gamma": self.gamma, "r": self.r}


@dataclass(frozen=True)
class ArrowGraph:
    edges: tuple[ArrowEdge, ...]
    tail_edges: tuple[ArrowEdge, ...]
    connected: bool
    symmetric: bool


def component_orbit_size(sigma: Frobenius, gamma: int) -> int:
    """d: size of the sigma-orbit of the simple component containing gamma."""
    datum = sigma.datum
    comp = datum.component_of_root(gamma)
    seen = {comp}
    cur = comp
    while True:
        offset = datum.components[cur].offset
        cur = datum.component_of_simple(sigma.simple_perm[offset])
        if cur in seen:
            return len(seen)
        seen.add(cur)


def r_bound(sigma: Frobenius, gamma: int) -> int:
    d = component_orbit_size(sigma, gamma)
    size = len(sigma.root_orbit(gamma))
    if size == d:
        return d - 1
    if size == 2 * d:
        return d
    return 2 * d - 1


class ArrowRelation:
    """x ->^{(gamma, r)} x' for classes of one S^+; intermediate classes must lie in S^+ too."""

    def __init__(self, sigma: Frobenius, lam: Sequence[int], splus: SPlus, congruence: bool = True):
        self.sigma = sigma
        self.datum = sigma.datum
        self.lam = tuple(int(c) for c in lam)
        self.splus = splus
        self.levi: LeviData = splus.levi
        self.congruence = congruence
        self.members = splus.by_class()

    def _coroot(self, gamma: int, power: int = 0) -> IntVec:
        return self.datum.coroots[self.sigma.root(gamma, power)]

    def _mu_below(self, v: Sequence[int]) -> bool:
        return self.datum.preceq(self.levi.omega_rep(v).mu, self.lam, self.congruence)

    def target(self, x: IntVec, gamma: int, r: int) -> IntVec:
        shift = tuple(a - b for a, b in zip(self._coroot(gamma, r), self._coroot(gamma), strict=True))
        return self.levi.add(x, shift)

    def is_arrow(self, x: IntVec, x2: IntVec, gamma: int, r: int) -> bool:
        if x not in self.members or x2 not in self.members:
            return False
        if self.target(x, gamma, r) != x2:
            return False
        minus = tuple(a - b for a, b in zip(self.members[x].mu, self._coroot(gamma), strict=True))
        plus = tuple(a + b for a, b in zip(self.members[x].mu, self._coroot(gamma, r), strict=True))
        return self._mu_below(minus) and self._mu_below(plus)

    def is_tail(self, x: IntVec, x2: IntVec, gamma: int, r: int) -> bool:
        if not self.is_arrow(x, x2, gamma, r):
            return False
        for i in range(1, r):
            g_i = self.sigma.root(gamma, i)
            mid = self.target(x, gamma, i)
            if self.is_arrow(x, mid, gamma, i) and self.is_arrow(mid, x2, g_i, r - i):
                return False
            mid = self.target(x, g_i, r - i)
            if self.is_arrow(x, mid, g_i, r - i) and self.is_arrow(mid, x2, gamma, i):
                return False
        return True

    def out_edges(self, x: IntVec) -> list[ArrowEdge]:
        out = []
        for gamma in range(len(self.datum.roots)):
            if gamma in self._levi_roots:
                continue
            for r in range(1, r_bound(self.sigma, gamma) + 1):
                x2 = self.target(x, gamma, r)
                if self.is_arrow(x, x2, gamma, r):
                    out.append(ArrowEdge(x, x2, gamma, r))
        return out

    @cached_property
    def _levi_roots(self) -> frozenset[int]:
        return frozenset(self.datum.roots_of(self.levi.J))


def strongly_connected(nodes: Iterable[IntVec], edges: Iterable[ArrowEdge]) -> bool:
    nodes = list(nodes)
    if len(nodes) <= 1:
        return True
    fwd: dict[IntVec, set[IntVec]] = {x: set() for x in nodes}
    back: dict[IntVec, set[IntVec]] = {x: set() for x in nodes}
    for e in edges:
        if e.x != e.x2:
            fwd[e.x].add(e.x2)
            back[e.x2].add(e.x)

    def reach(adj: dict[IntVec, set[IntVec]]) -> set[IntVec]:
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    return len(reach(fwd)) == len(nodes) and len(reach(back)) == len(nodes)


def arrows(sigma: Frobenius, lam: Sequence[int], splus: SPlus, congruence: bool = True) -> ArrowGraph:
    rel = ArrowRelation(sigma, lam, splus, congruence)
    datum = sigma.datum
    edges: list[ArrowEdge] = []
    for x in splus.elements:
        edges.extend(rel.out_edges(x.cls))
    edges.sort()
    tails = [e for e in edges if rel.is_tail(e.x, e.x2, e.gamma, e.r)]
    symmetric = all(rel.is_arrow(e.x2, e.x, datum.negate(e.gamma), e.r) for e in edges)
    usable = [
        e
        for e in tails
        if (flags := datum.classify_coweight(datum.coroots[e.gamma], splus.J)).k_dominant and flags.k_minuscule
    ]
    connected = strongly_connected([x.cls for x in splus.elements], usable)
    logger.debug("arrow graph: %d edges, %d tail, connected=%s", len(edges), len(tails), connected)
    return ArrowGraph(tuple(edges), tuple(tails), connected, symmetric)
