"""Permissible roots: the backward (x sigma)-orbit of alpha first leaves Phi through a positive affine root."""

from __future__ import annotations

from dataclasses import dataclass

from src.affine.element import AffRoot, ExtAffElem
from src.bruhat.admissible import AdmissibleSet
from src.errors import BudgetExceeded
from src.sigma.frobenius import Frobenius
from src.sigma.newton import newton_point


@dataclass(frozen=True)
class Permissible:
    m_map: dict[int, int]
    roots: frozenset[int]
    exits: dict[int, AffRoot]


class TwistedRootAction:
    """(x sigma)^{±1} on affine roots as a root permutation plus a level shift."""

    def __init__(self, sigma: Frobenius, x: ExtAffElem):
        grp = sigma.group
        n_roots = len(grp.datum.roots)
        inv = grp.invert(x)
        back_perm, back_shift, fwd_perm, fwd_shift = [0] * n_roots, [0] * n_roots, [0] * n_roots, [0] * n_roots
        for r in range(n_roots):
            a = grp.act_on_affroot(inv, AffRoot(r, 0))
            back_perm[r] = sigma.root(a.alpha, -1)
            back_shift[r] = a.k
            b = grp.act_on_affroot(x, AffRoot(sigma.root(r), 0))
            fwd_perm[r] = b.alpha
            fwd_shift[r] = b.k
        self._back = (tuple(back_perm), tuple(back_shift))
        self._fwd = (tuple(fwd_perm), tuple(fwd_shift))

    def backward(self, root: AffRoot) -> AffRoot:
        perm, shift = self._back
        return AffRoot(perm[root.alpha], root.k + shift[root.alpha])

    def forward(self, root: AffRoot) -> AffRoot:
        perm, shift = self._fwd
        return AffRoot(perm[root.alpha], root.k + shift[root.alpha])

    def orbit(self, root: AffRoot, lo: int, hi: int) -> dict[int, AffRoot]:
        """alpha^i = (x sigma)^i(alpha) for lo <= i <= hi (lo <= 0 <= hi)."""
        out = {0: root}
        cur = root
        for i in range(1, hi + 1):
            cur = self.forward(cur)
            out[i] = cur
        cur = root
        for i in range(1, -lo + 1):
            cur = self.backward(cur)
            out[-i] = cur
        return out


def _exit_step(step, root: AffRoot, cap: int) -> tuple[int, AffRoot]:
    cur = root
    for i in range(1, cap + 1):
        cur = step(cur)
        if cur.k != 0:
            return i, cur
    raise BudgetExceeded(f"backward orbit of {root} stayed in Phi for {cap} steps")


def permissible(sigma: Frobenius, x: ExtAffElem, adm: AdmissibleSet) -> Permissible:
    """m_{alpha,x} for alpha in Phi+ minus Phi_{nu_x}, and the permissible set."""
    adm.require(x)
    grp = sigma.group
    datum = grp.datum
    nu = newton_point(sigma, x).nu
    action = TwistedRootAction(sigma, x)
    cap = 2 * len(datum.roots) * sigma.order + 2
    m_map: dict[int, int] = {}
    exits: dict[int, AffRoot] = {}
    roots = set()
    for r in range(datum.n_pos):
        if datum.pair(r, nu) == 0:
            continue
        m, exit_root = _exit_step(action.backward, AffRoot(r, 0), cap)
        m_map[r] = m
        exits[r] = exit_root
        reflected = grp.compose(x, grp.finite(grp.root_reflection(sigma.root(r))))
        if reflected in adm and grp.is_positive_affroot(exit_root):
            roots.add(r)
    return Permissible(m_map, frozenset(roots), exits)


def permissible_blind(sigma: Frobenius, x: ExtAffElem, adm: AdmissibleSet) -> frozenset[int]:
    """The permissible set recomputed by applying sigma^{-1} x^{-1} step by step."""
    grp = sigma.group
    datum = grp.datum
    nu = newton_point(sigma, x).nu
    x_inv = grp.invert(x)
    out = set()
    for r in range(datum.n_pos):
        if datum.pair(r, nu) == 0:
            continue
        cur = AffRoot(r, 0)
        for _ in range(2 * len(datum.roots) * sigma.order + 2):
            cur = sigma.affroot(grp.act_on_affroot(x_inv, cur), -1)
            if cur.k != 0:
                break
        s_alpha = grp.affine_reflection(AffRoot(sigma.root(r), 0))
        if grp.compose(x, s_alpha) in adm and grp.is_positive_affroot(cur):
            out.add(r)
    return frozenset(out)
