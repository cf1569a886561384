"""sigma-orbits of roots outside the Levi: periods, types, the roots vartheta_alpha and the C-sets."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

from sympy import Matrix

from src.components.levi import LeviData, Pi1MJElem
from src.errors import AdlvError, NotSimplyLaced
from src.rootdata.lattice import IntegerLattice
from src.sigma.frobenius import Frobenius

logger = logging.getLogger(__name__)

IntVec = tuple[int, ...]


class OrbitType(str, Enum):
    I = "I"  # noqa: E741
    II = "II"
    III = "III"


@dataclass(frozen=True)
class OrbitInfo:
    orbit: tuple[int, ...]
    psi: frozenset[int]
    psi_parts: tuple[frozenset[int], ...]
    n: int
    type: OrbitType
    vartheta: dict[int, int]
    omega: IntVec
    omega_fixed: bool
    union_is_base: bool
    readings_agree: bool = True

    def to_json(self) -> dict:
        return {
            "orbit": list(self.orbit),
            "n": self.n,
            "type": self.type.value,
            "vartheta": {str(k): v for k, v in sorted(self.vartheta.items())},
            "omega": list(self.omega),
            "omega_fixed": self.omega_fixed,
            "union_is_base": self.union_is_base,
            "readings_agree": self.readings_agree,
        }


def span_roots(levi: LeviData, orbit: Sequence[int]) -> frozenset[int]:
    """Psi = Phi ∩ Z(O ∪ J)."""
    datum = levi.datum
    rows = [list(datum.roots[r]) for r in orbit]
    for j in sorted(levi.J):
        rows.append([1 if i == j else 0 for i in range(datum.rank)])
    lattice = IntegerLattice(rows, datum.rank)
    return frozenset(r for r, root in enumerate(datum.roots) if lattice.contains(root))


def root_parts(levi: LeviData, roots: Iterable[int]) -> tuple[frozenset[int], ...]:
    """Irreducible components of a closed root subsystem: classes of the non-orthogonality relation."""
    datum = levi.datum
    left = set(roots)
    out = []
    while left:
        seed = min(left)
        part = {seed}
        queue = deque([seed])
        while queue:
            a = queue.popleft()
            for b in list(left - part):
                if datum.root_pair_coroot(a, b) != 0:
                    part.add(b)
                    queue.append(b)
        left -= part
        out.append(frozenset(part))
    return tuple(out)


def _part_of(parts: Sequence[frozenset[int]], r: int) -> int:
    return next(i for i, p in enumerate(parts) if r in p)


def _is_base(levi: LeviData, nodes: Sequence[int], psi: frozenset[int]) -> bool:
    """nodes form a simple system of Psi: each root of Psi is a nonnegative or nonpositive combination."""
    datum = levi.datum
    if not nodes:
        return not psi
    basis = Matrix([list(datum.roots[r]) for r in nodes]).T
    if basis.rank() != len(nodes):
        return False
    for r in psi:
        sol = basis.solve_least_squares(Matrix(datum.roots[r]))
        coeffs = list(sol)
        if any(c.q != 1 for c in coeffs):
            return False
        if not (all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)):
            return False
    return True


def _tree_hull(levi: LeviData, nodes: Sequence[int], chosen: set[int]) -> set[int]:
    """Smallest connected set of nodes containing *chosen* in the diagram on *nodes*."""
    datum = levi.datum
    adj = {a: [b for b in nodes if b != a and datum.root_pair_coroot(a, b) != 0] for a in nodes}
    hull = set(chosen)
    items = sorted(chosen)
    for start in items:
        parent = {start: None}
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if b not in parent:
                    parent[b] = a
                    queue.append(b)
        for goal in items:
            if goal not in parent:
                raise AdlvError(f"roots {start} and {goal} are not connected in O ∪ J")
            node = goal
            while node is not None:
                hull.add(node)
                node = parent[node]
    return hull


def vartheta(sigma: Frobenius, levi: LeviData, orbit: Sequence[int], n: int) -> dict[int, int]:
    """alpha -> sum of the minimal sigma^n-stable connected subset of O ∪ J containing alpha."""
    datum = levi.datum
    if not datum.simply_laced:
        raise NotSimplyLaced(f"vartheta needs a simply-laced datum, got {datum.label}")
    nodes = list(orbit) + [datum.simple_root_indices[j] for j in sorted(levi.J)]
    out = {}
    for alpha in orbit:
        cur = {alpha}
        while True:
            grown = cur | {sigma.root(a, n) for a in cur}
            grown = _tree_hull(levi, nodes, grown)
            if grown == cur:
                break
            cur = grown
        total = [0] * datum.rank
        for a in cur:
            total = [x + y for x, y in zip(total, datum.roots[a], strict=True)]
        out[alpha] = datum.index_of(total)
    return out


def orbit_info(sigma: Frobenius, levi: LeviData, orbit: Sequence[int]) -> OrbitInfo:
    datum = levi.datum
    orbit = tuple(orbit)
    psi = span_roots(levi, orbit)
    parts = root_parts(levi, psi)
    alpha = orbit[0]
    home = _part_of(parts, alpha)
    n = next(k for k in range(1, len(orbit) + 1) if _part_of(parts, sigma.root(alpha, k)) == home)
    ratio, rem = divmod(len(orbit), n)
    if rem or ratio not in (1, 2, 3):
        raise AdlvError(f"orbit {orbit} of size {len(orbit)} has period {n}")
    kind = (OrbitType.I, OrbitType.II, OrbitType.III)[ratio - 1]

    omega_vec = [0] * datum.rank
    for a in orbit:
        omega_vec = [x + y for x, y in zip(omega_vec, datum.coroots[a], strict=True)]
    omega = levi.class_of(omega_vec)
    fixed = levi.class_of(sigma.coweight(omega_vec)) == omega

    nodes = list(orbit) + [datum.simple_root_indices[j] for j in sorted(levi.J)]
    base = _is_base(levi, nodes, psi)
    # the O ∩ J reading of the simple-system hypothesis
    meet = [r for r in orbit if r in set(nodes[len(orbit) :])]
    agree = _is_base(levi, meet, psi) == base
    if not agree:
        logger.debug("orbit %s: O ∪ J and O ∩ J readings disagree (union is base: %s)", orbit, base)
    theta = vartheta(sigma, levi, orbit, n) if kind is not OrbitType.I and base and datum.simply_laced else {}
    return OrbitInfo(orbit, psi, parts, n, kind, theta, omega, fixed, base, agree)


def anti_dominant_orbits(sigma: Frobenius, levi: LeviData) -> list[tuple[int, ...]]:
    """sigma-orbits of roots in Phi+ minus Phi_J whose coroots are J-anti-dominant."""
    datum = levi.datum
    inside = set(datum.roots_of(levi.J))
    roots = [
        r
        for r in range(datum.n_pos)
        if r not in inside and datum.classify_coweight(datum.coroots[r], levi.J).k_antidominant
    ]
    keep = set(roots)
    return [o for o in sigma.root_orbits(roots) if set(o) <= keep]


def c_set(levi: LeviData, lam: Sequence[int], x: Pi1MJElem, congruence: bool = True) -> frozenset[int]:
    """C_{lambda,b,x}: alpha in Phi+ minus Phi_J with mu_x + alpha^vee ⪯ lambda, alpha^vee J-anti-dominant
    and strongly J-minuscule."""
    datum = levi.datum
    inside = set(datum.roots_of(levi.J))
    out = set()
    for r in range(datum.n_pos):
        if r in inside:
            continue
        shifted = tuple(a + b for a, b in zip(x.mu, datum.coroots[r], strict=True))
        if not datum.preceq(shifted, lam, congruence):
            continue
        flags = datum.classify_coweight(datum.coroots[r], levi.J, require_coroot=True)
        if flags.k_antidominant and flags.strongly_k_minuscule:
            out.add(r)
    return frozenset(out)
