"""Bruhat order on W~ = W^a ⋊ Omega."""

from __future__ import annotations

from itertools import combinations

from src.affine.element import ExtAffElem
from src.affine.group import AffineWeylGroup
from src.errors import DatumMismatch


class BruhatOrder:
    """Comparisons by the lifting property, with a subword oracle for small cases."""

    def __init__(self, group: AffineWeylGroup):
        self.group = group
        self._cache: dict[tuple[ExtAffElem, ExtAffElem], bool] = {}

    def leq(self, x: ExtAffElem, y: ExtAffElem) -> bool:
        if x.datum_key != y.datum_key:
            raise DatumMismatch(f"cannot compare elements of {x.datum_key} and {y.datum_key}")
        return self._leq(x, y)

    def _leq(self, x: ExtAffElem, y: ExtAffElem) -> bool:
        if x == y:
            return True
        g = self.group
        lx, ly = g.length(x), g.length(y)
        if lx >= ly:
            return False
        key = (x, y)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        # lifting: for s a left descent of y, x <= y iff min(x, sx) <= sy
        s = g.left_descents(y)[0]
        sy = g.compose(s.elem, y)
        sx = g.compose(s.elem, x)
        hit = self._leq(sx if g.length(sx) < lx else x, sy)
        self._cache[key] = hit
        return hit

    def lt(self, x: ExtAffElem, y: ExtAffElem) -> bool:
        return x != y and self.leq(x, y)

    def leq_by_subword(self, x: ExtAffElem, y: ExtAffElem) -> bool:
        """x <= y iff x' is a subword product of a reduced word of y' (same Omega part)."""
        g = self.group
        word_y, omega_y = g.decompose(y)
        word_x, omega_x = g.decompose(x)
        if omega_x != omega_y:
            return False
        target = g.from_labels(word_x)
        for size in range(len(word_x), len(word_y) + 1):
            for picks in combinations(range(len(word_y)), size):
                if g.from_labels(word_y[i] for i in picks) == target:
                    return True
        return False

    def covers_down(self, y: ExtAffElem) -> list[ExtAffElem]:
        """The z = r y with r an affine reflection and l(z) = l(y) - 1."""
        g = self.group
        target = g.length(y) - 1
        out: dict[ExtAffElem, None] = {}
        for beta in g.inversion_roots(y):
            z = g.compose(y, g.affine_reflection(beta))
            if g.length(z) == target:
                out[z] = None
        return sorted(out, key=_elem_key)

    def covers_up(self, y: ExtAffElem, max_level: int) -> list[ExtAffElem]:
        """The z = y r with l(z) = l(y) + 1, over reflections of level at most max_level."""
        g = self.group
        target = g.length(y) + 1
        out: dict[ExtAffElem, None] = {}
        for r in g.iter_reflections(max_level):
            z = g.compose(y, r)
            if g.length(z) == target:
                out[z] = None
        return sorted(out, key=_elem_key)


def _elem_key(x: ExtAffElem) -> tuple:
    return (x.mu, x.w.index)


def elem_sort_key(group: AffineWeylGroup, x: ExtAffElem) -> tuple:
    return (group.length(x), x.mu, x.w.index)
