"""pi_1(G) = Y / ZPhi^vee with its sigma-fixed points and sigma-coinvariants.

The Frobenius enters through its permutation of simple indices ``perm``:
``(sigma mu)[perm[i]] = mu[i]``.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import cached_property

from src.rootdata.datum import RootDatum
from src.rootdata.lattice import IntegerLattice, finite_group_invariants

IntVec = tuple[int, ...]


def permute_coweight(perm: Sequence[int], mu: Sequence) -> tuple:
    out = [0] * len(mu)
    for i, x in enumerate(mu):
        out[perm[i]] = x
    return tuple(out)


def sigma_minus_one_rows(perm: Sequence[int]) -> list[list[int]]:
    rows = []
    for i in range(len(perm)):
        if perm[i] != i:
            row = [0] * len(perm)
            row[perm[i]] += 1
            row[i] -= 1
            rows.append(row)
    return rows


class Pi1Group:
    """Finite abelian quotient of Y by the coroot lattice, with canonical representatives."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.lattice: IntegerLattice = datum.coroot_lattice

    def class_of(self, mu: Sequence[int]) -> IntVec:
        return self.lattice.reduce(mu)

    @property
    def zero(self) -> IntVec:
        return (0,) * self.datum.rank

    @cached_property
    def elements(self) -> tuple[IntVec, ...]:
        return tuple(self.lattice.coset_representatives())

    def add(self, a: IntVec, b: IntVec) -> IntVec:
        return self.class_of(tuple(x + y for x, y in zip(a, b, strict=True)))

    def neg(self, a: IntVec) -> IntVec:
        return self.class_of(tuple(-x for x in a))

    def multiple(self, a: IntVec, k: int) -> IntVec:
        return self.class_of(tuple(k * x for x in a))

    def order(self) -> int:
        return self.lattice.index()

    def invariant_factors(self) -> tuple[int, ...]:
        return self.lattice.invariant_factors()

    def counted_invariants(self, subset: Sequence[IntVec] | None = None) -> tuple[int, ...]:
        return finite_group_invariants(list(subset if subset is not None else self.elements), self.multiple)

    # ------------------------------------------------------------------
    # sigma
    # ------------------------------------------------------------------

    def apply(self, perm: Sequence[int], cls: IntVec) -> IntVec:
        return self.class_of(permute_coweight(perm, cls))

    def fixed_classes(self, perm: Sequence[int]) -> tuple[IntVec, ...]:
        return tuple(c for c in self.elements if self.apply(perm, c) == c)

    def fixed_invariants(self, perm: Sequence[int]) -> tuple[int, ...]:
        return self.counted_invariants(self.fixed_classes(perm))

    def fixed_invariants_dual(self, perm: Sequence[int]) -> tuple[int, ...]:
        """Invariant factors of pi_1^sigma via the coinvariants of the dual group."""
        n = self.datum.rank
        transpose = [[self.datum.cartan[j][i] for j in range(n)] for i in range(n)]
        return IntegerLattice(transpose + sigma_minus_one_rows(perm), n).invariant_factors()

    def coinvariant_lattice(self, perm: Sequence[int]) -> IntegerLattice:
        return IntegerLattice([list(r) for r in self.datum.cartan] + sigma_minus_one_rows(perm), self.datum.rank)

    def coinvariant_class(self, perm: Sequence[int], mu: Sequence[int]) -> IntVec:
        return self.coinvariant_lattice(perm).reduce(mu)

    def coinvariant_invariants(self, perm: Sequence[int]) -> tuple[int, ...]:
        return self.coinvariant_lattice(perm).invariant_factors()
