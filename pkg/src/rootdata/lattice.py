"""Integer lattices, quotients Z^n / L and finite abelian group invariants.

Everything is exact.  Coset representatives come from a row-style Hermite
echelon basis; invariant factors come from sympy's Smith normal form and, for
explicitly listed subgroups, from counting element orders.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Sequence
from itertools import product
from math import prod

from sympy import Matrix, ZZ, factorint
from sympy.matrices.normalforms import smith_normal_form

IntVec = tuple[int, ...]


def _echelon(rows: Iterable[Sequence[int]], columns: Sequence[int]) -> tuple[list[tuple[int, list[int]]], list[list[int]]]:
    """Echelonize *rows* over *columns* in order.

    Returns ``(pivots, rest)`` where ``pivots`` is a list of ``(column, row)``
    with positive pivot entries and ``rest`` holds the rows that vanish on all
    processed columns.
    """
    remaining = [list(r) for r in rows if any(r)]
    pivots: list[tuple[int, list[int]]] = []
    for col in columns:
        active = [r for r in remaining if r[col] != 0]
        rest = [r for r in remaining if r[col] == 0]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            head = active[0]
            survivors = [head]
            for r in active[1:]:
                q = r[col] // head[col]
                reduced = [a - q * b for a, b in zip(r, head, strict=True)]
                if reduced[col] != 0:
                    survivors.append(reduced)
                elif any(reduced):
                    rest.append(reduced)
            active = survivors
        if active:
            head = active[0]
            if head[col] < 0:
                head = [-a for a in head]
            pivots.append((col, head))
        remaining = [r for r in rest if any(r)]
    return pivots, remaining


class IntegerLattice:
    """A sublattice of Z^dim given by generating rows."""

    def __init__(self, rows: Iterable[Sequence[int]], dim: int):
        self.dim = dim
        pivots, _ = _echelon(rows, range(dim))
        self._pivots = pivots

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def basis(self) -> tuple[IntVec, ...]:
        return tuple(tuple(row) for _, row in self._pivots)

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.dim

    def reduce(self, v: Sequence[int]) -> IntVec:
        """Canonical representative of ``v + L``: pivot coordinates land in ``[0, pivot)``."""
        out = list(v)
        for col, row in self._pivots:
            q = out[col] // row[col]
            if q:
                out = [a - q * b for a, b in zip(out, row, strict=True)]
        return tuple(out)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def index(self) -> int:
        """|Z^dim / L| for a full-rank lattice."""
        if not self.is_full_rank:
            raise ValueError("quotient by a lattice of deficient rank is infinite")
        return prod(row[col] for col, row in self._pivots)

    def coset_representatives(self) -> Iterator[IntVec]:
        """All canonical representatives of a finite quotient, in lexicographic order."""
        if not self.is_full_rank:
            raise ValueError("quotient by a lattice of deficient rank is infinite")
        bounds = [0] * self.dim
        for col, row in self._pivots:
            bounds[col] = row[col]
        yield from product(*(range(b) for b in bounds))

    def same_as(self, other: IntegerLattice) -> bool:
        return (
            self.dim == other.dim
            and all(other.contains(b) for b in self.basis)
            and all(self.contains(b) for b in other.basis)
        )

    def invariant_factors(self) -> tuple[int, ...]:
        """Torsion invariant factors of Z^dim / L (nontrivial ones, ascending)."""
        if not self._pivots:
            return ()
        snf = smith_normal_form(Matrix([list(b) for b in self.basis]), domain=ZZ)
        diagonal = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
        return normalize_invariants(d for d in diagonal if d > 1)

    def free_rank(self) -> int:
        return self.dim - self.rank


def normalize_invariants(orders: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... of the direct sum of cyclic groups of the given orders."""
    by_prime: dict[int, list[int]] = {}
    for n in orders:
        for p, e in factorint(n).items():
            by_prime.setdefault(int(p), []).append(int(e))
    return _combine_primary(by_prime)


def _combine_primary(by_prime: dict[int, list[int]]) -> tuple[int, ...]:
    width = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * width
    for p, exps in by_prime.items():
        for i, e in enumerate(sorted(exps, reverse=True)):
            factors[i] *= p**e
    return tuple(sorted(f for f in factors if f > 1))


def finite_group_invariants(elements: Sequence[IntVec], multiple: Callable[[IntVec, int], IntVec]) -> tuple[int, ...]:
    """Invariant factors of an explicitly listed finite abelian group.

    ``multiple(x, k)`` must return the canonical form of ``k * x``; the zero of
    the group is ``multiple(x, 0)``.  Uses the count of ``p^k``-torsion points.
    """
    n = len(elements)
    if n <= 1:
        return ()
    zero = multiple(elements[0], 0)
    by_prime: dict[int, list[int]] = {}
    for p, e in factorint(n).items():
        p, e = int(p), int(e)
        torsion = [sum(1 for x in elements if multiple(x, p**k) == zero) for k in range(e + 1)]
        # r[k] = number of cyclic p-factors of order >= p^k
        ranks = []
        for k in range(1, e + 1):
            ratio = torsion[k] // torsion[k - 1]
            r = 0
            while ratio > 1:
                ratio //= p
                r += 1
            ranks.append(r)
        parts = [sum(1 for r in ranks if r >= j) for j in range(1, (ranks[0] if ranks else 0) + 1)]
        by_prime[p] = [x for x in parts if x > 0]
    return _combine_primary(by_prime)


def integer_kernel(matrix: Sequence[Sequence[int]], ncols: int) -> tuple[IntVec, ...]:
    """A Z-basis of {x in Z^ncols : A x = 0} for the integer matrix A (list of rows)."""
    m = len(matrix)
    augmented = [[matrix[i][k] for i in range(m)] + [1 if j == k else 0 for j in range(ncols)] for k in range(ncols)]
    _, rest = _echelon(augmented, range(m))
    tails = [r[m:] for r in rest]
    pivots, _ = _echelon(tails, range(ncols))
    return tuple(tuple(row) for _, row in pivots)


def subgroup_closure(generators: Iterable[IntVec], add: Callable[[IntVec, IntVec], IntVec], zero: IntVec) -> frozenset[IntVec]:
    """Finite subgroup generated by *generators* inside a finite abelian group."""
    gens = [g for g in generators if g != zero]
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = add(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)
