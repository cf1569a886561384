"""The finite Weyl group W0, enumerated as indexed elements.

Elements carry their permutation of the root list, the integer matrix of their
action on Y (fundamental-coweight coordinates) and a canonical reduced word
(repeatedly strip the lowest-index left descent).
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING

from src.errors import RankTooLarge

if TYPE_CHECKING:
    from src.rootdata.datum import RootDatum

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class WeylElem:
    """Element of W0; equality and hashing go through the enumeration index."""

    index: int
    word: tuple[int, ...] = field(compare=False)
    perm: tuple[int, ...] = field(compare=False, repr=False)
    matrix: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    datum_key: str = field(compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return self.index == 0


class WeylGroup:
    def __init__(self, datum: RootDatum, budget: int):
        self.datum = datum
        n_roots = len(datum.roots)
        self._n_pos = datum.n_pos
        simple_perms = [datum.reflection_perm(i) for i in range(datum.rank)]

        identity = tuple(range(n_roots))
        perms: list[tuple[int, ...]] = [identity]
        by_perm: dict[tuple[int, ...], int] = {identity: 0}
        frontier = [identity]
        while frontier:
            nxt = []
            for p in frontier:
                for sp in simple_perms:
                    q = tuple(sp[r] for r in p)
                    if q not in by_perm:
                        by_perm[q] = len(perms)
                        perms.append(q)
                        nxt.append(q)
                        if len(perms) > budget:
                            raise RankTooLarge(f"|W0| exceeds the enumeration budget {budget} for {datum.label}")
            frontier = nxt

        simple_idx = datum.simple_root_indices
        words: list[tuple[int, ...]] = [()] * len(perms)
        elements: list[WeylElem] = []
        for idx, p in enumerate(perms):
            inv = [0] * n_roots
            for r, image in enumerate(p):
                inv[image] = r
            if idx:
                # lowest left descent: w^{-1}(alpha_i) negative
                i = next(i for i in range(datum.rank) if inv[simple_idx[i]] >= self._n_pos)
                shorter = by_perm[tuple(simple_perms[i][r] for r in p)]
                words[idx] = (i, *words[shorter])
            matrix = tuple(datum.roots[inv[simple_idx[j]]] for j in range(datum.rank))
            elements.append(WeylElem(idx, words[idx], p, matrix, datum.label))

        self.elements: tuple[WeylElem, ...] = tuple(elements)
        self._by_perm = by_perm
        self._inverse = [by_perm[tuple(inv_perm(p))] for p in perms]
        self._mul_cache: dict[tuple[int, int], int] = {}
        self._simple = tuple(self.elements[by_perm[sp]] for sp in simple_perms)
        logger.debug("enumerated W0 for %s: %d elements", datum.label, len(perms))

    # ------------------------------------------------------------------
    # Group structure
    # ------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> WeylElem:
        return self.elements[0]

    def simple(self, i: int) -> WeylElem:
        return self._simple[i]

    def mul(self, a: WeylElem, b: WeylElem) -> WeylElem:
        key = (a.index, b.index)
        hit = self._mul_cache.get(key)
        if hit is None:
            if a.index == 0:
                hit = b.index
            elif b.index == 0:
                hit = a.index
            else:
                ap = a.perm
                hit = self._by_perm[tuple(ap[r] for r in b.perm)]
            self._mul_cache[key] = hit
        return self.elements[hit]

    def inv(self, a: WeylElem) -> WeylElem:
        return self.elements[self._inverse[a.index]]

    def from_word(self, word: Iterable[int]) -> WeylElem:
        out = self.identity
        for i in word:
            out = self.mul(out, self._simple[i])
        return out

    def from_perm(self, perm: Sequence[int]) -> WeylElem:
        return self.elements[self._by_perm[tuple(perm)]]

    # ------------------------------------------------------------------
    # Actions
    # ------------------------------------------------------------------

    def act(self, w: WeylElem, v: Sequence[int | Fraction]) -> tuple:
        if w.index == 0:
            return tuple(v)
        return tuple(sum(m * x for m, x in zip(row, v, strict=True)) for row in w.matrix)

    def act_root(self, w: WeylElem, root_index: int) -> int:
        return w.perm[root_index]

    def orbit(self, v: Sequence[int | Fraction]) -> frozenset[tuple]:
        return frozenset(self.act(w, v) for w in self.elements)

    # ------------------------------------------------------------------
    # Descents, parabolic pieces
    # ------------------------------------------------------------------

    def is_right_descent(self, w: WeylElem, i: int) -> bool:
        """l(w s_i) < l(w)."""
        return w.perm[self.datum.simple_root_indices[i]] >= self._n_pos

    def is_left_descent(self, w: WeylElem, i: int) -> bool:
        """l(s_i w) < l(w)."""
        return self.inv(w).perm[self.datum.simple_root_indices[i]] >= self._n_pos

    def longest(self, subset: Iterable[int] | None = None) -> WeylElem:
        letters = sorted(range(self.datum.rank) if subset is None else set(subset))
        w = self.identity
        grew = True
        while grew:
            grew = False
            for i in letters:
                if not self.is_right_descent(w, i):
                    w = self.mul(w, self._simple[i])
                    grew = True
                    break
        return w

    def parabolic(self, subset: Iterable[int]) -> tuple[WeylElem, ...]:
        """Elements of W_K, sorted by length then index."""
        gens = [self._simple[i] for i in sorted(set(subset))]
        seen = {0: self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in gens:
                    ws = self.mul(w, s)
                    if ws.index not in seen:
                        seen[ws.index] = ws
                        nxt.append(ws)
            frontier = nxt
        return tuple(sorted(seen.values(), key=lambda w: (w.length, w.index)))

    def min_right_coset_reps(self, subset: Iterable[int]) -> tuple[WeylElem, ...]:
        """W0^K: the z with l(z s) > l(z) for every s in K."""
        k = sorted(set(subset))
        return tuple(w for w in self.elements if not any(self.is_right_descent(w, i) for i in k))

    def min_left_coset_reps(self, subset: Iterable[int]) -> tuple[WeylElem, ...]:
        """^K W0: the z with l(s z) > l(z) for every s in K."""
        k = sorted(set(subset))
        return tuple(w for w in self.elements if not any(self.is_left_descent(w, i) for i in k))

    def support(self, w: WeylElem) -> frozenset[int]:
        return frozenset(w.word)


def inv_perm(p: Sequence[int]) -> list[int]:
    out = [0] * len(p)
    for r, image in enumerate(p):
        out[image] = r
    return out
