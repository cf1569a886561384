"""One-call analysis of (lambda, b, sigma) and its versioned JSON form."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from src.affine.element import ExtAffElem
from src.affine.notation import format_elem
from src.bruhat.admissible import AdmissibleSet, adm_set
from src.bruhat.order import elem_sort_key
from src.components.arrows import ArrowGraph, arrows
from src.components.hodge_newton import HNStatus, hn_status
from src.components.leaves import Leaf, full_scan, s_leaf, s_plus
from src.components.levi import CentralParts, j0_j1
from src.components.orbits import OrbitInfo, anti_dominant_orbits, c_set, orbit_info
from src.components.pi0 import Pi0Prediction, pi0_prediction
from src.errors import LeafEmpty
from src.sigma.frobenius import Frobenius

logger = logging.getLogger(__name__)

SCHEMA = "adlv-report/1"


@dataclass
class ComponentReport:
    lam: tuple[int, ...]
    b: ExtAffElem
    status: HNStatus
    J: frozenset[int] = frozenset()
    b_normalized: ExtAffElem | None = None
    s_plus: tuple = ()
    leaves: dict[tuple[int, ...], Leaf] = field(default_factory=dict)
    empty_leaves: tuple[tuple[int, ...], ...] = ()
    decomposition: bool = True
    arrow_graph: ArrowGraph | None = None
    orbit_infos: tuple[OrbitInfo, ...] = ()
    c_sets: dict[tuple[int, ...], frozenset[int]] = field(default_factory=dict)
    central_parts: CentralParts | None = None
    pi0: Pi0Prediction | None = None

    @property
    def pi0_order(self) -> int | None:
        return self.pi0.order if self.pi0 else None

    @property
    def consistency(self) -> bool:
        return self.pi0.consistency if self.pi0 else True

    @property
    def distinguished(self) -> dict[tuple[int, ...], ExtAffElem | None]:
        return {x: leaf.unique_distinguished for x, leaf in self.leaves.items()}

    def to_json(self, group) -> dict[str, Any]:
        def fmt(y: ExtAffElem) -> str:
            return format_elem(y)

        def sorted_elems(elems) -> list[str]:
            return [fmt(y) for y in sorted(elems, key=lambda y: elem_sort_key(group, y))]

        out: dict[str, Any] = {
            "schema": SCHEMA,
            "lambda": list(self.lam),
            "b": fmt(self.b),
            "status": self.status.to_json(),
            "J": sorted(self.J),
            "b_normalized": fmt(self.b_normalized) if self.b_normalized is not None else None,
            "s_plus": [x.to_json() for x in self.s_plus],
            "leaves": [
                {
                    "x": list(x),
                    "elements": sorted_elems(leaf.elements),
                    "distinguished": [fmt(y) for y in leaf.distinguished],
                }
                for x, leaf in sorted(self.leaves.items())
            ],
            "empty_leaves": [list(x) for x in self.empty_leaves],
            "decomposition": self.decomposition,
            "arrows": None,
            "orbits": [o.to_json() for o in self.orbit_infos],
            "c_sets": [{"x": list(x), "roots": sorted(c)} for x, c in sorted(self.c_sets.items())],
            "j0": sorted(self.central_parts.J0) if self.central_parts else [],
            "j1": sorted(self.central_parts.J1) if self.central_parts else [],
            "pi0": self.pi0.to_json() if self.pi0 else None,
        }
        if self.arrow_graph is not None:
            out["arrows"] = {
                "edges": [e.to_json() for e in self.arrow_graph.edges],
                "tail_edges": [e.to_json() for e in self.arrow_graph.tail_edges],
                "connected": self.arrow_graph.connected,
                "symmetric": self.arrow_graph.symmetric,
            }
        return out


def analyze(
    sigma: Frobenius,
    lam: Sequence[int],
    b: ExtAffElem,
    adm: AdmissibleSet | None = None,
    congruence: bool = True,
) -> ComponentReport:
    """Run the whole engine; an empty X(lambda, b) yields a report carrying only its status."""
    grp = sigma.group
    lam = tuple(int(c) for c in lam)
    status = hn_status(sigma, lam, b)
    report = ComponentReport(lam, b, status)
    if not status.nonempty:
        return report
    adm = adm if adm is not None else adm_set(grp, lam)

    splus = s_plus(sigma, lam, b, congruence)
    report.J = splus.J
    report.b_normalized = splus.normalized.b
    report.s_plus = splus.elements

    empty = []
    union: set[ExtAffElem] = set()
    for x in splus.elements:
        try:
            leaf = s_leaf(sigma, adm, x)
        except LeafEmpty:
            logger.warning("empty leaf at x=%s for lambda=%s", x.cls, lam)
            empty.append(x.cls)
            continue
        report.leaves[x.cls] = leaf
        union |= leaf.elements
    report.empty_leaves = tuple(empty)
    report.decomposition = union == set(full_scan(sigma, adm, b))

    report.arrow_graph = arrows(sigma, lam, splus, congruence)
    report.orbit_infos = tuple(orbit_info(sigma, splus.levi, o) for o in anti_dominant_orbits(sigma, splus.levi))
    report.c_sets = {x.cls: c_set(splus.levi, lam, x, congruence) for x in splus.elements}
    report.central_parts = j0_j1(splus.levi, splus.elements)
    if status.irreducible or status.central:
        report.pi0 = pi0_prediction(sigma, lam, b)
    logger.debug("analysis of lambda=%s b=%s done: |S+|=%d", lam, b, len(splus.elements))
    return report
