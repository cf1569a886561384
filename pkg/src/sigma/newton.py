"""Newton and Kottwitz points, semi-standard elements and the Hodge-Newton data of (lambda, b)."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from src.affine.element import AffRoot, ExtAffElem
from src.affine.pi1 import sigma_minus_one_rows
from src.rootdata.lattice import IntegerLattice
from src.sigma.frobenius import Frobenius

Vec = tuple[Fraction, ...]


@dataclass(frozen=True)
class NewtonKottwitz:
    nu: Vec  # nu_x itself, not dominantized
    newton: Vec
    kottwitz: tuple[int, ...]
    period: int
    xi: tuple[int, ...]


@dataclass(frozen=True)
class SemiStandard:
    semi_standard: bool
    standard: bool
    nu: Vec


def finite_twist_order(sigma: Frobenius, x: ExtAffElem) -> int:
    """Order of p(x sigma) in W0 ⋊ <sigma>."""
    W = sigma.group.W
    accum = W.identity
    cur = x.w
    k = 0
    while True:
        accum = W.mul(accum, cur)
        cur = sigma.weyl(cur)
        k += 1
        if accum.index == 0 and k % sigma.order == 0:
            return k


def twisted_power(sigma: Frobenius, x: ExtAffElem, m: int) -> ExtAffElem:
    """The W~ part of (x sigma)^m = x sigma(x) ... sigma^{m-1}(x) sigma^m."""
    g = sigma.group
    out = g.identity
    cur = x
    for _ in range(m):
        out = g.compose(out, cur)
        cur = sigma.apply(cur)
    return out


def twisted_finite_action(sigma: Frobenius, x: ExtAffElem, v: Sequence, power: int = 1) -> tuple:
    """p(x sigma)^power (v) = (w sigma)^power v."""
    W = sigma.group.W
    out = tuple(v)
    for _ in range(power):
        out = W.act(x.w, sigma.coweight(out))
    return out


def newton_point(sigma: Frobenius, x: ExtAffElem) -> NewtonKottwitz:
    g = sigma.group
    accum = g.identity
    cur = x
    m = 0
    while True:
        accum = g.compose(accum, cur)
        cur = sigma.apply(cur)
        m += 1
        if accum.w.index == 0 and m % sigma.order == 0:
            break
    xi = accum.mu
    nu = tuple(Fraction(c, m) for c in xi)
    newton, _ = g.datum.dominant_conjugate(nu)
    kappa = g.pi1.coinvariant_class(sigma.simple_perm, x.mu)
    return NewtonKottwitz(nu, tuple(Fraction(c) for c in newton), kappa, m, xi)


def _semi_standard_core(sigma: Frobenius, x: ExtAffElem, nu: Vec) -> bool:
    g = sigma.group
    datum = g.datum
    levi = [r for r in range(len(datum.roots)) if datum.pair(r, nu) == 0]
    levi_set = set(levi)
    for r in levi:
        image = x.w.perm[sigma.root_perm[r]]
        if image not in levi_set:
            return False
        floor = AffRoot(r, 1 if datum.is_positive(r) else 0)
        if not g.is_positive_affroot(g.act_on_affroot(x, sigma.affroot(floor))):
            return False
    return True


def is_semi_standard(sigma: Frobenius, x: ExtAffElem) -> SemiStandard:
    """x sigma stabilizes the positive affine roots of the Levi of nu_x.

    Decided on the floor roots (alpha, 1), alpha > 0, and (alpha, 0), alpha < 0,
    of Phi_nu: x sigma shifts the level of each root by a fixed amount and a
    power of it acts trivially on those affine roots.
    """
    nk = newton_point(sigma, x)
    semi = _semi_standard_core(sigma, x, nk.nu)
    return SemiStandard(semi, semi and sigma.group.datum.is_dominant(nk.nu), nk.nu)


def is_semi_standard_by_window(sigma: Frobenius, x: ExtAffElem, window: int | None = None) -> bool:
    """Scan every affine root of Phi_nu with |k| <= window in both directions."""
    g = sigma.group
    datum = g.datum
    nk = newton_point(sigma, x)
    bound = window if window is not None else max(abs(datum.pair(r, x.mu)) for r in range(len(datum.roots))) + 2
    for r in range(len(datum.roots)):
        if datum.pair(r, nk.nu) != 0:
            continue
        for k in range(-bound, bound + 1):
            root = AffRoot(r, k)
            image = g.act_on_affroot(x, sigma.affroot(root))
            if datum.pair(image.alpha, nk.nu) != 0:
                return False
            if g.is_positive_affroot(root) != g.is_positive_affroot(image):
                return False
    return True


def sigma_average(sigma: Frobenius, lam: Sequence[int]) -> Vec:
    """lambda^diamond: the dominant sigma-average of lambda."""
    total = [Fraction(0)] * len(lam)
    cur = tuple(lam)
    for _ in range(sigma.order):
        total = [a + b for a, b in zip(total, cur, strict=True)]
        cur = sigma.coweight(cur)
    avg = tuple(t / sigma.order for t in total)
    dom, _ = sigma.group.datum.dominant_conjugate(avg)
    return tuple(Fraction(c) for c in dom)


def levi_coinvariant_lattice(sigma: Frobenius, subset: Iterable[int]) -> IntegerLattice:
    """Y / (ZPhi_J^vee + (sigma - 1)Y), the target of kappa_{M_J}."""
    datum = sigma.datum
    rows = [list(datum.cartan[j]) for j in sorted(set(subset))]
    return IntegerLattice(rows + sigma_minus_one_rows(sigma.simple_perm), datum.rank)


def kappa_levi(sigma: Frobenius, subset: Iterable[int], mu: Sequence[int]) -> tuple[int, ...]:
    return levi_coinvariant_lattice(sigma, subset).reduce(mu)
