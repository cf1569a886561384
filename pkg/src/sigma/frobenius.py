"""Frobenius actions: diagram automorphisms of the root datum, possibly permuting components."""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from src.affine.element import AffRoot, ExtAffElem, SimpleReflection
from src.affine.group import AffineWeylGroup
from src.affine.pi1 import permute_coweight
from src.errors import NotDiagramAutomorphism
from src.rootdata.datum import RootDatum
from src.rootdata.weyl import WeylElem, inv_perm

PRESETS = ("id", "flip", "swap", "triality", "flip+swap")

# zero-based, Bourbaki labelling
_TRIALITY_D4 = (2, 1, 3, 0)


@dataclass(frozen=True)
class Frobenius:
    group: AffineWeylGroup = field(repr=False, compare=False)
    simple_perm: tuple[int, ...]
    name: str = "custom"

    def __post_init__(self):
        datum = self.group.datum
        perm = self.simple_perm
        n = datum.rank
        if sorted(perm) != list(range(n)):
            raise NotDiagramAutomorphism(f"{perm} is not a permutation of the {n} simple indices")
        for i in range(n):
            for j in range(n):
                if datum.cartan[perm[i]][perm[j]] != datum.cartan[i][j]:
                    raise NotDiagramAutomorphism(f"{perm} does not preserve the Cartan matrix of {datum.label}")

    @property
    def datum(self) -> RootDatum:
        return self.group.datum

    @cached_property
    def order(self) -> int:
        k, cur = 1, self.simple_perm
        while any(cur[i] != i for i in range(len(cur))):
            cur = tuple(self.simple_perm[c] for c in cur)
            k += 1
        return k

    @property
    def is_identity(self) -> bool:
        return self.order == 1

    @cached_property
    def y_action(self) -> tuple[tuple[int, ...], ...]:
        """Integer matrix of sigma on Y: row perm[i] has its 1 in column i."""
        n = self.datum.rank
        rows = [[0] * n for _ in range(n)]
        for i, j in enumerate(self.simple_perm):
            rows[j][i] = 1
        return tuple(tuple(r) for r in rows)

    @cached_property
    def inverse_perm(self) -> tuple[int, ...]:
        return tuple(inv_perm(self.simple_perm))

    # ------------------------------------------------------------------
    # Actions
    # ------------------------------------------------------------------

    def coweight(self, mu: Sequence, power: int = 1) -> tuple:
        out = tuple(mu)
        perm = self.simple_perm if power >= 0 else self.inverse_perm
        for _ in range(abs(power) % self.order):
            out = permute_coweight(perm, out)
        return out

    @cached_property
    def root_perm(self) -> tuple[int, ...]:
        datum = self.datum
        return tuple(datum.root_index[permute_coweight(self.simple_perm, r)] for r in datum.roots)

    @cached_property
    def root_perm_inverse(self) -> tuple[int, ...]:
        return tuple(inv_perm(self.root_perm))

    def root(self, r: int, power: int = 1) -> int:
        table = self.root_perm if power >= 0 else self.root_perm_inverse
        for _ in range(abs(power) % self.order):
            r = table[r]
        return r

    def affroot(self, root: AffRoot, power: int = 1) -> AffRoot:
        return AffRoot(self.root(root.alpha, power), root.k)

    def weyl(self, w: WeylElem) -> WeylElem:
        """sigma w sigma^{-1}."""
        if self.is_identity or w.index == 0:
            return w
        p, q = self.root_perm, self.root_perm_inverse
        return self.group.W.from_perm(tuple(p[w.perm[q[r]]] for r in range(len(p))))

    def weyl_inverse(self, w: WeylElem) -> WeylElem:
        if self.is_identity or w.index == 0:
            return w
        p, q = self.root_perm, self.root_perm_inverse
        return self.group.W.from_perm(tuple(q[w.perm[p[r]]] for r in range(len(p))))

    def apply(self, x: ExtAffElem, power: int = 1) -> ExtAffElem:
        """sigma(t^mu w) = t^{sigma mu} sigma w sigma^{-1}."""
        if self.is_identity:
            return x
        out = x
        step = self.weyl if power >= 0 else self.weyl_inverse
        for _ in range(abs(power) % self.order):
            out = ExtAffElem(permute_coweight(self.simple_perm if power >= 0 else self.inverse_perm, out.mu), step(out.w))
        return out

    def simple(self, s: SimpleReflection) -> SimpleReflection:
        g = self.group
        if s.is_affine:
            comp = self.datum.component_of_simple(self.simple_perm[self.datum.components[s.component].offset])
            return next(t for t in g.simple_reflections if t.is_affine and t.component == comp)
        return g.simple_by_index(self.simple_perm[s.finite_index])

    # ------------------------------------------------------------------
    # Orbits
    # ------------------------------------------------------------------

    @cached_property
    def simple_orbits(self) -> tuple[frozenset[int], ...]:
        """sigma-orbits of S0 as sets of simple indices, ordered by smallest member."""
        seen: set[int] = set()
        out = []
        for i in range(self.datum.rank):
            if i in seen:
                continue
            orbit = {i}
            j = self.simple_perm[i]
            while j != i:
                orbit.add(j)
                j = self.simple_perm[j]
            seen |= orbit
            out.append(frozenset(orbit))
        return tuple(out)

    def root_orbit(self, r: int) -> tuple[int, ...]:
        out = [r]
        nxt = self.root_perm[r]
        while nxt != r:
            out.append(nxt)
            nxt = self.root_perm[nxt]
        return tuple(out)

    def root_orbits(self, roots: Sequence[int]) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for r in roots:
            if r not in seen:
                orbit = self.root_orbit(r)
                seen |= set(orbit)
                out.append(orbit)
        return out

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "perm": [p + 1 for p in self.simple_perm], "order": self.order}


# ----------------------------------------------------------------------
# Construction from specs
# ----------------------------------------------------------------------


def _flip_of(series: str, rank: int) -> tuple[int, ...]:
    if series == "A" and rank >= 2:
        return tuple(rank - 1 - i for i in range(rank))
    if series == "D":
        return tuple(range(rank - 2)) + (rank - 1, rank - 2)
    if series == "E" and rank == 6:
        return (5, 1, 4, 3, 2, 0)
    raise NotDiagramAutomorphism(f"{series}{rank} has no diagram flip")


def _assemble(datum: RootDatum, local: Sequence[Sequence[int]], shift: int) -> tuple[int, ...]:
    comps = datum.components
    perm = [0] * datum.rank
    for ci, comp in enumerate(comps):
        target = comps[(ci + shift) % len(comps)]
        if target.series != comp.series or target.rank != comp.rank:
            raise NotDiagramAutomorphism(f"cannot send {comp.label} onto {target.label}")
        for i in range(comp.rank):
            perm[comp.offset + i] = target.offset + local[ci][i]
    return tuple(perm)


def make_frobenius(group: AffineWeylGroup, spec: str | dict[str, Any] | Sequence[int] | None = None) -> Frobenius:
    """Build sigma from a preset name, the JSON form ``{"perm": [...], "components_shift": k}`` or a 1-based perm."""
    datum = group.datum
    identity_local = [tuple(range(c.rank)) for c in datum.components]
    if spec is None:
        spec = "id"
    if isinstance(spec, str):
        text = spec.strip()
        if text.startswith("{") or text.startswith("["):
            return make_frobenius(group, json.loads(text))
        name = text.lower()
        if name == "id":
            return Frobenius(group, tuple(range(datum.rank)), "id")
        if name == "flip":
            local = [_flip_of(c.series, c.rank) for c in datum.components]
            return Frobenius(group, _assemble(datum, local, 0), "flip")
        if name == "swap":
            if len(datum.components) < 2:
                raise NotDiagramAutomorphism("swap needs at least two components")
            return Frobenius(group, _assemble(datum, identity_local, 1), "swap")
        if name == "flip+swap":
            if len(datum.components) < 2:
                raise NotDiagramAutomorphism("flip+swap needs at least two components")
            local = [_flip_of(c.series, c.rank) for c in datum.components]
            return Frobenius(group, _assemble(datum, local, 1), "flip+swap")
        if name == "triality":
            if any((c.series, c.rank) != ("D", 4) for c in datum.components):
                raise NotDiagramAutomorphism("triality needs type D4")
            return Frobenius(group, _assemble(datum, [_TRIALITY_D4] * len(datum.components), 0), "triality")
        raise NotDiagramAutomorphism(f"unknown Frobenius preset '{spec}' (expected one of {', '.join(PRESETS)})")
    if isinstance(spec, dict):
        raw = spec.get("perm")
        shift = int(spec.get("components_shift", 0))
        if raw is None:
            return Frobenius(group, _assemble(datum, identity_local, shift), "custom")
        perm0 = [int(p) - 1 for p in raw]
        ranks = {c.rank for c in datum.components}
        if len(perm0) == datum.rank and not (len(ranks) == 1 and len(datum.components) > 1 and len(perm0) in ranks):
            base = Frobenius(group, tuple(perm0), "custom")
            if not shift:
                return base
            shifted = _assemble(datum, identity_local, shift)
            return Frobenius(group, tuple(shifted[p] for p in base.simple_perm), "custom")
        if len(ranks) == 1 and len(perm0) in ranks:
            return Frobenius(group, _assemble(datum, [tuple(perm0)] * len(datum.components), shift), "custom")
        raise NotDiagramAutomorphism(f"perm of length {len(perm0)} fits neither a component nor the whole datum")
    return Frobenius(group, tuple(int(p) - 1 for p in spec), "custom")
