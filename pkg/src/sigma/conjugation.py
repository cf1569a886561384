"""sigma-conjugation by simple affine reflections and He's partial conjugation.

A subset K of S^a is a frozenset of simple-reflection labels; W_K must be
finite, which fails only when K contains all affine simple reflections of a
component.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum

from src.affine.element import ExtAffElem, SimpleReflection
from src.affine.group import AffineWeylGroup
from src.errors import BudgetExceeded, PlateauExhausted
from src.sigma.frobenius import Frobenius

logger = logging.getLogger(__name__)

DEFAULT_CLASS_BUDGET = 20_000

Labels = frozenset[str]


class MoveKind(str, Enum):
    ARROW = "arrow"  # s x sigma(s) with l <= l(x)
    HALFARROW = "halfarrow"  # s x sigma(s) with s x < x


@dataclass(frozen=True)
class Move:
    label: str
    before: ExtAffElem
    after: ExtAffElem


@dataclass(frozen=True)
class PartialConjugation:
    start: ExtAffElem
    x: ExtAffElem
    u: ExtAffElem
    stable_subset: Labels
    trace: tuple[Move, ...] = field(default=())

    @property
    def end(self) -> ExtAffElem:
        return self.trace[-1].after if self.trace else self.start


def sigma_conjugate(sigma: Frobenius, g: ExtAffElem, x: ExtAffElem) -> ExtAffElem:
    """g x sigma(g)^{-1}."""
    grp = sigma.group
    return grp.mul(g, x, grp.invert(sigma.apply(g)))


def conj_move(sigma: Frobenius, x: ExtAffElem, s: SimpleReflection, kind: MoveKind | str = MoveKind.ARROW) -> ExtAffElem | None:
    grp = sigma.group
    kind = MoveKind(kind)
    y = grp.mul(s.elem, x, sigma.simple(s).elem)
    if kind is MoveKind.ARROW:
        return y if grp.length(y) <= grp.length(x) else None
    return y if grp.is_left_descent(x, s) else None


def finite_subset(group: AffineWeylGroup, labels: Iterable[str]) -> bool:
    k = set(labels)
    for ci, comp in enumerate(group.datum.components):
        members = {s.label for s in group.simple_reflections if s.component == ci}
        if members <= k:
            return False
    return True


def parabolic_subgroup(group: AffineWeylGroup, labels: Iterable[str], budget: int = DEFAULT_CLASS_BUDGET) -> tuple[ExtAffElem, ...]:
    """Elements of W_K by length, for W_K finite."""
    gens = [group.simple(label).elem for label in sorted(set(labels))]
    seen = {group.identity}
    order = [group.identity]
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = group.compose(x, s)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
                    if len(seen) > budget:
                        raise BudgetExceeded(f"W_K for K={sorted(labels)} exceeds {budget} elements")
        frontier = nxt
    return tuple(order)


def longest_of(group: AffineWeylGroup, labels: Iterable[str]) -> ExtAffElem:
    return max(parabolic_subgroup(group, labels), key=group.length)


def is_k_minimal(group: AffineWeylGroup, x: ExtAffElem, labels: Iterable[str]) -> bool:
    """x in ^K W~: x < s x for every s in K."""
    return not any(group.is_left_descent(x, group.simple(label)) for label in labels)


def k_minimal_part(group: AffineWeylGroup, x: ExtAffElem, labels: Iterable[str]) -> tuple[ExtAffElem, ExtAffElem]:
    """(u, y) with x = u y, u in W_K and y in ^K W~."""
    refl = [group.simple(label) for label in sorted(set(labels))]
    y = x
    while True:
        s = next((s for s in refl if group.is_left_descent(y, s)), None)
        if s is None:
            break
        y = group.compose(s.elem, y)
    return group.compose(x, group.invert(y)), y


def stable_subset(sigma: Frobenius, x: ExtAffElem, labels: Iterable[str]) -> Labels:
    """I(K, x) = max{K' ⊆ K : x sigma(K') x^{-1} = K'}, by iterative shrinking."""
    grp = sigma.group
    by_elem = {s.elem: s.label for s in grp.simple_reflections}
    x_inv = grp.invert(x)
    image: dict[str, str | None] = {}
    for label in labels:
        conj = grp.mul(x, sigma.simple(grp.simple(label)).elem, x_inv)
        image[label] = by_elem.get(conj)
    current = set(image)
    while True:
        keep = {label for label in current if image[label] in current}
        if keep == current:
            return frozenset(current)
        current = keep


def conjugacy_class(sigma: Frobenius, x: ExtAffElem, labels: Iterable[str], budget: int = DEFAULT_CLASS_BUDGET) -> frozenset[ExtAffElem]:
    """The W_K-sigma-conjugacy class of x."""
    return frozenset(sigma_conjugate(sigma, u, x) for u in parabolic_subgroup(sigma.group, labels, budget))


def move_graph(sigma: Frobenius, x: ExtAffElem, labels: Iterable[str], kind: MoveKind | str, budget: int = DEFAULT_CLASS_BUDGET) -> dict[ExtAffElem, list[tuple[str, ExtAffElem]]]:
    """Every element reachable from x by ->_K (or ⇀_K) moves, with its outgoing moves."""
    grp = sigma.group
    refl = [grp.simple(label) for label in sorted(set(labels))]
    graph: dict[ExtAffElem, list[tuple[str, ExtAffElem]]] = {}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        if y in graph:
            continue
        edges = []
        for s in refl:
            z = conj_move(sigma, y, s, kind)
            if z is not None:
                edges.append((s.label, z))
                if z not in graph:
                    queue.append(z)
        graph[y] = edges
        if len(graph) > budget:
            raise BudgetExceeded(f"move graph from {x} exceeds {budget} nodes")
    return graph


def _terminal(sigma: Frobenius, y: ExtAffElem, labels: Labels, budget: int) -> tuple[ExtAffElem, ExtAffElem, Labels] | None:
    grp = sigma.group
    u, xmin = k_minimal_part(grp, y, labels)
    stable = stable_subset(sigma, xmin, labels)
    if u == grp.identity or u in set(parabolic_subgroup(grp, stable, budget)):
        return xmin, u, stable
    return None


def partial_conjugation(sigma: Frobenius, x: ExtAffElem, labels: Iterable[str], budget: int = DEFAULT_CLASS_BUDGET) -> PartialConjugation:
    """Reach u y with y in ^K W~ and u in W_{I(K,y)} by ->_K moves.

    Strictly length-decreasing moves are taken first; on a plateau a
    breadth-first search over same-length moves finds an exit.
    """
    grp = sigma.group
    k = frozenset(labels)
    refl = [grp.simple(label) for label in sorted(k)]
    cur = x
    trace: list[Move] = []
    visits = 0
    while True:
        done = _terminal(sigma, cur, k, budget)
        if done is not None:
            xmin, u, stable = done
            return PartialConjugation(x, xmin, u, stable, tuple(trace))
        step = None
        for s in refl:
            y = conj_move(sigma, cur, s, MoveKind.ARROW)
            if y is not None and grp.length(y) < grp.length(cur):
                step = Move(s.label, cur, y)
                break
        if step is not None:
            trace.append(step)
            cur = step.after
            continue
        path = _plateau_exit(sigma, cur, refl, k, budget)
        visits += len(path)
        if visits > budget:
            raise BudgetExceeded(f"partial conjugation of {x} exceeded {budget} moves")
        trace.extend(path)
        cur = path[-1].after


def _plateau_exit(sigma: Frobenius, start: ExtAffElem, refl: list[SimpleReflection], k: Labels, budget: int) -> list[Move]:
    grp = sigma.group
    level = grp.length(start)
    parent: dict[ExtAffElem, Move | None] = {start: None}
    queue = deque([start])
    while queue:
        y = queue.popleft()
        exit_found = y != start and _terminal(sigma, y, k, budget) is not None
        if not exit_found and y != start:
            exit_found = any(
                (z := conj_move(sigma, y, s, MoveKind.ARROW)) is not None and grp.length(z) < level for s in refl
            )
        if exit_found:
            path = []
            node = y
            while parent[node] is not None:
                move = parent[node]
                path.append(move)
                node = move.before
            return list(reversed(path))
        for s in refl:
            z = conj_move(sigma, y, s, MoveKind.ARROW)
            if z is not None and z not in parent and grp.length(z) == level:
                parent[z] = Move(s.label, y, z)
                queue.append(z)
                if len(parent) > budget:
                    raise BudgetExceeded(f"plateau search from {start} exceeded {budget} elements")
    raise PlateauExhausted(f"no exit from the length-{level} plateau of {start}")


def k_minimal_in_class(sigma: Frobenius, x: ExtAffElem, labels: Iterable[str], budget: int = DEFAULT_CLASS_BUDGET) -> list[ExtAffElem]:
    grp = sigma.group
    labels = frozenset(labels)
    return sorted(
        (y for y in conjugacy_class(sigma, x, labels, budget) if is_k_minimal(grp, y, labels)),
        key=lambda y: (grp.length(y), y.mu, y.w.index),
    )
