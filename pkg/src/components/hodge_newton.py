"""Non-emptiness and Hodge-Newton irreducibility of X(lambda, b)."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from src.affine.element import ExtAffElem
from src.sigma.frobenius import Frobenius
from src.sigma.newton import newton_point, sigma_average


@dataclass(frozen=True)
class HNStatus:
    nonempty: bool
    irreducible: bool
    lambda_diamond: tuple[Fraction, ...]
    defect: tuple[Fraction, ...]
    central: bool = False

    def to_json(self) -> dict:
        return {
            "nonempty": self.nonempty,
            "irreducible": self.irreducible,
            "central": self.central,
            "lambda_diamond": [str(c) for c in self.lambda_diamond],
            "defect": [str(c) for c in self.defect],
        }


def hn_status(sigma: Frobenius, lam: Sequence[int], b: ExtAffElem) -> HNStatus:
    """X(lambda, b) is nonempty iff kappa(t^lambda) = kappa(b) and nu_b <= lambda^diamond.

    Irreducible additionally needs lambda^diamond - nu_b strictly positive on
    every simple coroot.
    """
    grp = sigma.group
    datum = grp.datum
    lam = tuple(int(c) for c in lam)
    perm = sigma.simple_perm
    same_kappa = grp.pi1.coinvariant_class(perm, lam) == grp.pi1.coinvariant_class(perm, b.mu)
    diamond = sigma_average(sigma, lam)
    nu = newton_point(sigma, b).newton
    nonempty = same_kappa and datum.leq_cone(nu, diamond)
    defect = datum.simple_coroot_coords(tuple(a - c for a, c in zip(diamond, nu, strict=True)))
    irreducible = nonempty and all(c > 0 for c in defect)
    return HNStatus(nonempty, irreducible, diamond, tuple(defect), datum.is_central(lam))
