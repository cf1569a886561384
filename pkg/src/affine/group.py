"""The extended affine Weyl group W~ = Y ⋊ W0 of a root datum.

Affine roots (alpha, k) are the functions v -> -<alpha, v> + k.  They are
positive on the base alcove exactly when k >= 1 for alpha > 0 and k >= 0 for
alpha < 0.  Lengths use the closed form

    l(t^mu w) = sum_{alpha > 0} | <w alpha, mu> + [w alpha < 0] |

which agrees with counting positive affine roots sent to negative ones; the
explicit count over a finite window of k is kept as ``inversion_count``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from fractions import Fraction
from functools import cached_property, lru_cache

from src.affine.element import AffRoot, ExtAffElem, SimpleReflection
from src.affine.pi1 import Pi1Group
from src.errors import DatumMismatch, NotationError
from src.rootdata.datum import RootDatum
from src.rootdata.weyl import WeylElem

logger = logging.getLogger(__name__)

IntVec = tuple[int, ...]


class AffineWeylGroup:
    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.W = datum.weyl
        self.pi1 = Pi1Group(datum)
        self._length_cache: dict[ExtAffElem, int] = {}
        self._root_reflections: dict[int, WeylElem] = {}
        self._simple = self._build_simple_reflections()
        self._by_label = {s.label: s for s in self._simple}

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.datum.rank

    def elem(self, mu: Sequence[int], w: WeylElem | None = None) -> ExtAffElem:
        return ExtAffElem(tuple(int(x) for x in mu), w if w is not None else self.W.identity)

    @cached_property
    def identity(self) -> ExtAffElem:
        return self.elem((0,) * self.rank)

    def translation(self, mu: Sequence[int]) -> ExtAffElem:
        return self.elem(mu)

    def finite(self, w: WeylElem) -> ExtAffElem:
        return self.elem((0,) * self.rank, w)

    def finite_word(self, word: Iterable[int]) -> ExtAffElem:
        return self.finite(self.W.from_word(word))

    def root_reflection(self, r: int) -> WeylElem:
        """s_alpha for the root with index r (s_alpha = s_{-alpha})."""
        r = r if self.datum.is_positive(r) else self.datum.negate(r)
        hit = self._root_reflections.get(r)
        if hit is None:
            perm = []
            for b in range(len(self.datum.roots)):
                c = self.datum.root_pair_coroot(b, r)
                image = tuple(x - c * y for x, y in zip(self.datum.roots[b], self.datum.roots[r], strict=True))
                perm.append(self.datum.root_index[image])
            hit = self.W.from_perm(perm)
            self._root_reflections[r] = hit
        return hit

    def affine_reflection(self, root: AffRoot) -> ExtAffElem:
        """s_(alpha,k) = t^{k alpha^vee} s_alpha."""
        coroot = self.datum.coroots[root.alpha]
        return self.elem(tuple(root.k * x for x in coroot), self.root_reflection(root.alpha))

    # ------------------------------------------------------------------
    # Group law
    # ------------------------------------------------------------------

    def _check(self, *elems: ExtAffElem) -> None:
        for x in elems:
            if x.datum_key != self.datum.label or len(x.mu) != self.rank:
                raise DatumMismatch(f"element of {x.datum_key} used with {self.datum.label}")

    def compose(self, a: ExtAffElem, b: ExtAffElem) -> ExtAffElem:
        self._check(a, b)
        shifted = self.W.act(a.w, b.mu)
        mu = tuple(x + y for x, y in zip(a.mu, shifted, strict=True))
        return ExtAffElem(mu, self.W.mul(a.w, b.w))

    def mul(self, *elems: ExtAffElem) -> ExtAffElem:
        out = self.identity
        for x in elems:
            out = self.compose(out, x)
        return out

    def invert(self, a: ExtAffElem) -> ExtAffElem:
        self._check(a)
        w_inv = self.W.inv(a.w)
        return ExtAffElem(tuple(-x for x in self.W.act(w_inv, a.mu)), w_inv)

    def power(self, a: ExtAffElem, n: int) -> ExtAffElem:
        base = a if n >= 0 else self.invert(a)
        out = self.identity
        for _ in range(abs(n)):
            out = self.compose(out, base)
        return out

    def finite_part(self, a: ExtAffElem) -> WeylElem:
        """p: W~ -> W0."""
        return a.w

    def act_on_point(self, a: ExtAffElem, v: Sequence) -> tuple:
        return tuple(x + y for x, y in zip(a.mu, self.W.act(a.w, v), strict=True))

    # ------------------------------------------------------------------
    # Affine roots
    # ------------------------------------------------------------------

    def act_on_affroot(self, a: ExtAffElem, root: AffRoot) -> AffRoot:
        image = a.w.perm[root.alpha]
        return AffRoot(image, root.k + self.datum.pair(image, a.mu))

    def is_positive_affroot(self, root: AffRoot) -> bool:
        if self.datum.is_positive(root.alpha):
            return root.k >= 1
        return root.k >= 0

    def evaluate_affroot(self, root: AffRoot, v: Sequence) -> Fraction:
        return Fraction(root.k) - Fraction(self.datum.pair(root.alpha, v))

    def negate_affroot(self, root: AffRoot) -> AffRoot:
        return AffRoot(self.datum.negate(root.alpha), -root.k)

    @cached_property
    def alcove_barycenter(self) -> tuple[Fraction, ...]:
        """A point of the base alcove (barycenter of its vertices) in fundamental-coweight coordinates."""
        n = self.rank
        point = [Fraction(0)] * n
        for ci, comp in enumerate(self.datum.components):
            theta = self.datum.roots[self.datum.highest_roots[ci]]
            # vertices: 0 and omega_i^vee / theta_i
            count = comp.rank + 1
            for i in comp.indices:
                point[i] += Fraction(1, theta[i]) / count
        return tuple(point)

    # ------------------------------------------------------------------
    # Length
    # ------------------------------------------------------------------

    def length(self, a: ExtAffElem) -> int:
        hit = self._length_cache.get(a)
        if hit is None:
            total = 0
            for r in range(self.datum.n_pos):
                image = a.w.perm[r]
                c = self.datum.pair(image, a.mu)
                if not self.datum.is_positive(image):
                    c += 1
                total += abs(c)
            hit = int(total)
            self._length_cache[a] = hit
        return hit

    def inversion_roots(self, a: ExtAffElem) -> list[AffRoot]:
        """Positive affine roots sent to negative ones.

        Only |k| <= max|<alpha, mu>| + 1 can change sign, so the scan is finite.
        """
        bound = max((abs(self.datum.pair(r, a.mu)) for r in range(len(self.datum.roots))), default=0) + 1
        out = []
        for r in range(len(self.datum.roots)):
            for k in range(-bound - 1, bound + 2):
                root = AffRoot(r, k)
                if self.is_positive_affroot(root) and not self.is_positive_affroot(self.act_on_affroot(a, root)):
                    out.append(root)
        return out

    def inversion_count(self, a: ExtAffElem) -> int:
        return len(self.inversion_roots(a))
    # ------------------------------------------------------------------
    # Simple affine reflections, Omega, decomposition
    # ------------------------------------------------------------------

    def _build_simple_reflections(self) -> tuple[SimpleReflection, ...]:
        multi = len(self.datum.components) > 1
        affine = []
        for ci, theta in enumerate(self.datum.highest_roots):
            root = AffRoot(theta, 1)
            label = f"s0_{ci + 1}" if multi else "s0"
            affine.append(SimpleReflection(label, self.affine_reflection(root), root, ci, None))
        finite = []
        for i in range(self.rank):
            root = AffRoot(self.datum.negate(self.datum.simple_root_indices[i]), 0)
            elem = self.finite(self.W.simple(i))
            finite.append(SimpleReflection(f"s{i + 1}", elem, root, self.datum.component_of_simple(i), i))
        return tuple(affine + finite)

    @property
    def simple_reflections(self) -> tuple[SimpleReflection, ...]:
        """S^a: affine reflections first (one per component), then s1..sn."""
        return self._simple

    @property
    def finite_simple(self) -> tuple[SimpleReflection, ...]:
        return tuple(s for s in self._simple if not s.is_affine)

    def simple(self, label: str) -> SimpleReflection:
        try:
            return self._by_label[label]
        except KeyError:
            raise NotationError(f"unknown simple reflection '{label}' for {self.datum.label}") from None

    def simple_by_index(self, i: int) -> SimpleReflection:
        return self._by_label[f"s{i + 1}"]

    def is_left_descent(self, a: ExtAffElem, s: SimpleReflection) -> bool:
        """l(s a) < l(a)."""
        return not self.is_positive_affroot(self.act_on_affroot(self.invert(a), s.root))

    def is_right_descent(self, a: ExtAffElem, s: SimpleReflection) -> bool:
        """l(a s) < l(a)."""
        return not self.is_positive_affroot(self.act_on_affroot(a, s.root))

    def left_descents(self, a: ExtAffElem) -> tuple[SimpleReflection, ...]:
        inv = self.invert(a)
        return tuple(s for s in self._simple if not self.is_positive_affroot(self.act_on_affroot(inv, s.root)))

    def right_descents(self, a: ExtAffElem) -> tuple[SimpleReflection, ...]:
        return tuple(s for s in self._simple if self.is_right_descent(a, s))

    def decompose(self, a: ExtAffElem) -> tuple[tuple[str, ...], ExtAffElem]:
        """(reduced word of u, omega) with a = u * omega, u in W^a and l(omega) = 0."""
        word: list[str] = []
        cur = a
        while True:
            descents = self.left_descents(cur)
            if not descents:
                return tuple(word), cur
            s = descents[0]
            word.append(s.label)
            cur = self.compose(s.elem, cur)

    def reduced_word(self, a: ExtAffElem) -> tuple[str, ...]:
        return self.decompose(a)[0]

    def omega_part(self, a: ExtAffElem) -> ExtAffElem:
        return self.decompose(a)[1]

    def from_labels(self, labels: Iterable[str], tail: ExtAffElem | None = None) -> ExtAffElem:
        out = self.identity
        for label in labels:
            out = self.compose(out, self.simple(label).elem)
        return self.compose(out, tail) if tail is not None else out

    @cached_property
    def omega(self) -> tuple[ExtAffElem, ...]:
        """Omega, one element per pi_1 class, in the order of the class representatives."""
        out = []
        for cls in self.pi1.elements:
            out.append(self.omega_part(self.translation(cls)))
        return tuple(out)

    def is_length_zero(self, a: ExtAffElem) -> bool:
        return self.length(a) == 0

    def in_affine_weyl(self, a: ExtAffElem) -> bool:
        """a in W^a: eta(a) = 0."""
        return self.datum.in_coroot_lattice(a.mu)

    def eta(self, a: ExtAffElem) -> IntVec:
        return self.pi1.class_of(a.mu)

    def simple_affine_data(self) -> dict:
        return {
            "simple_reflections": [s.label for s in self._simple],
            "omega": list(self.omega),
            "pi1": self.pi1.invariant_factors(),
        }

    # ------------------------------------------------------------------
    # Enumeration
    # ------------------------------------------------------------------

    def ball(self, radius: int) -> list[ExtAffElem]:
        """All elements of length <= radius, by length then discovery order."""
        layers = self.ball_layers(radius)
        return [x for layer in layers for x in layer]

    def ball_layers(self, radius: int) -> list[list[ExtAffElem]]:
        seen = set(self.omega)
        layers = [list(self.omega)]
        for level in range(1, radius + 1):
            nxt = []
            for x in layers[-1]:
                for s in self._simple:
                    y = self.compose(s.elem, x)
                    if y not in seen and self.length(y) == level:
                        seen.add(y)
                        nxt.append(y)
            layers.append(nxt)
        logger.debug("ball of radius %d in %s: %d elements", radius, self.datum.label, len(seen))
        return layers

    def iter_reflections(self, max_level: int) -> Iterator[ExtAffElem]:
        """Affine reflections s_(alpha,k) with alpha > 0 and |k| <= max_level."""
        for r in range(self.datum.n_pos):
            for k in range(-max_level, max_level + 1):
                yield self.affine_reflection(AffRoot(r, k))

    def w0_translations(self, lam: Sequence[int]) -> list[ExtAffElem]:
        """t^{w lam} for the distinct w(lam)."""
        return [self.translation(mu) for mu in sorted(self.W.orbit(tuple(lam)))]

    def __repr__(self) -> str:
        return f"AffineWeylGroup({self.datum.label})"


@lru_cache(maxsize=32)
def affine_group(datum: RootDatum) -> AffineWeylGroup:
    return AffineWeylGroup(datum)
