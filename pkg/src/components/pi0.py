"""The predicted component group pi_1(G)^sigma and its Omega_J^sigma cross-check."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from math import prod

from src.affine.element import ExtAffElem
from src.components.hodge_newton import hn_status
from src.components.levi import levi_J_and_normalize
from src.errors import NotIrreducible
from src.rootdata.lattice import integer_kernel, subgroup_closure
from src.sigma.frobenius import Frobenius


@dataclass(frozen=True)
class Pi0Prediction:
    order: int | None
    group: tuple[int, ...]
    quotient: tuple[int, ...]
    consistency: bool
    discrete: bool = False

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "group": list(self.group),
            "quotient": list(self.quotient),
            "consistency": self.consistency,
            "discrete": self.discrete,
        }


def omega_j_image(sigma: Frobenius, J: frozenset[int]) -> frozenset[tuple[int, ...]]:
    """Image of Omega_J^sigma = (Y / ZPhi_J^vee)^sigma in pi_1(G).

    The fixed part lifts to {v in Y : (sigma - 1) v in ZPhi_J^vee}, found as the
    kernel of [sigma - 1 | -C_J] on (v, c).
    """
    datum = sigma.datum
    pi1 = sigma.group.pi1
    n = datum.rank
    k = sorted(J)
    act = sigma.y_action
    rows = []
    for i in range(n):
        row = [act[i][col] - (1 if i == col else 0) for col in range(n)]
        row += [-datum.cartan[j][i] for j in k]
        rows.append(row)
    kernel = integer_kernel(rows, n + len(k))
    gens = [pi1.class_of(vec[:n]) for vec in kernel]
    return subgroup_closure(gens, pi1.add, pi1.zero)


def pi0_prediction(sigma: Frobenius, lam: Sequence[int], b: ExtAffElem) -> Pi0Prediction:
    status = hn_status(sigma, lam, b)
    if status.central:
        return Pi0Prediction(None, (), (), True, discrete=True)
    if not status.irreducible:
        raise NotIrreducible(f"(lambda={tuple(lam)}, b={b}) is not Hodge-Newton irreducible")
    pi1 = sigma.group.pi1
    perm = sigma.simple_perm
    fixed = pi1.fixed_classes(perm)
    group = pi1.fixed_invariants(perm)
    J = levi_J_and_normalize(sigma, b).J
    image = omega_j_image(sigma, J)
    quotient = pi1.counted_invariants(sorted(image))
    consistency = image == frozenset(fixed) and quotient == group
    return Pi0Prediction(prod(group) if group else 1, group, quotient, consistency)
