"""The flat invariant nu^flat and the minimal z0 that makes it dominant."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from src.affine.element import ExtAffElem
from src.errors import NotInOrbit
from src.rootdata.weyl import WeylElem
from src.sigma.conjugation import sigma_conjugate
from src.sigma.frobenius import Frobenius
from src.sigma.newton import finite_twist_order, twisted_finite_action


@dataclass(frozen=True)
class FlatInvariant:
    eta: tuple[int, ...]
    A: int
    M: int
    N: int
    vec: tuple[Fraction, ...]


def flat_modulus(sigma: Frobenius, eta: Sequence[int]) -> tuple[int, int]:
    """(A, M): A = max |<alpha, eta>| and the least M >= 2 with M |<alpha, eta>| > 2A whenever nonzero."""
    datum = sigma.datum
    pairings = [abs(datum.pair(r, eta)) for r in range(len(datum.roots))]
    A = max(pairings, default=0)
    nonzero = [p for p in pairings if p]
    if not nonzero:
        return A, 2
    return A, max(2, (2 * A) // min(nonzero) + 1)


def flat_invariant(sigma: Frobenius, x: ExtAffElem, eta: Sequence[int] | None = None) -> FlatInvariant:
    """nu^flat = sum_{i < N} p(x sigma)^i(mu) / M^i for x in t^mu W0."""
    datum = sigma.datum
    mu = x.mu
    if eta is None:
        eta, _ = datum.dominant_conjugate(mu)
    eta = tuple(int(c) for c in eta)
    if mu not in datum.weyl.orbit(eta):
        raise NotInOrbit(f"{mu} is not W0-conjugate to {eta}")
    A, M = flat_modulus(sigma, eta)
    N = finite_twist_order(sigma, x)
    total = [Fraction(0)] * datum.rank
    cur: tuple = mu
    for i in range(N):
        scale = Fraction(1, M**i)
        total = [t + scale * c for t, c in zip(total, cur, strict=True)]
        cur = twisted_finite_action(sigma, x, cur)
    return FlatInvariant(eta, A, M, N, tuple(total))


def min_z0(sigma: Frobenius, x: ExtAffElem, eta: Sequence[int] | None = None) -> tuple[WeylElem, ExtAffElem]:
    """(z0, z0 x sigma(z0)^{-1}) with z0 the minimal element making nu^flat dominant."""
    flat = flat_invariant(sigma, x, eta)
    _, z0 = sigma.datum.dominant_conjugate(flat.vec)
    grp = sigma.group
    return z0, sigma_conjugate(sigma, grp.finite(z0), x)
