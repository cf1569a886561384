"""Tests for integer lattices and finite abelian invariants."""

import pytest

from src.rootdata.lattice import (
    IntegerLattice,
    finite_group_invariants,
    integer_kernel,
    normalize_invariants,
    subgroup_closure,
)
from src.rootdata.parse import build_root_datum


def _cyclic(n):
    return lambda x, k: tuple((c * k) % n for c in x)


class TestIntegerLattice:
    def test_a2_coroot_lattice(self):
        lattice = IntegerLattice(((2, -1), (-1, 2)), 2)
        assert lattice.is_full_rank
        assert lattice.index() == 3
        assert lattice.invariant_factors() == (3,)

    def test_contains(self):
        lattice = IntegerLattice(((2, -1), (-1, 2)), 2)
        assert lattice.contains((1, 1))
        assert lattice.contains((3, 0))
        assert not lattice.contains((1, 0))

    def test_reduce_is_canonical(self):
        lattice = IntegerLattice(((2, -1), (-1, 2)), 2)
        assert lattice.reduce((1, 0)) == lattice.reduce((3, -1))
        assert lattice.reduce((1, 1)) == (0, 0)

    def test_coset_representatives(self):
        lattice = IntegerLattice([[2]], 1)
        assert list(lattice.coset_representatives()) == [(0,), (1,)]

    @pytest.mark.parametrize("spec,factors", [("A1xA1", (2, 2)), ("D4", (2, 2)), ("A3", (4,)), ("G2", ())])
    def test_fundamental_group_invariants(self, spec, factors):
        assert build_root_datum(spec).coroot_lattice.invariant_factors() == factors

    def test_deficient_rank_has_infinite_index(self):
        lattice = IntegerLattice([[1, 0]], 2)
        assert lattice.free_rank() == 1
        with pytest.raises(ValueError, match="infinite"):
            lattice.index()

    def test_same_as(self):
        a = IntegerLattice([[2, 0], [0, 2]], 2)
        b = IntegerLattice([[2, 2], [0, 2]], 2)
        assert a.same_as(b)
        assert not a.same_as(IntegerLattice([[1, 0], [0, 2]], 2))


class TestInvariants:
    @pytest.mark.parametrize("orders,expected", [([2, 3], (6,)), ([2, 2], (2, 2)), ([4, 2], (2, 4)), ([1], ())])
    def test_normalize(self, orders, expected):
        assert normalize_invariants(orders) == expected

    def test_counted_cyclic(self):
        elements = [(k,) for k in range(4)]
        assert finite_group_invariants(elements, _cyclic(4)) == (4,)

    def test_counted_klein(self):
        elements = [(a, b) for a in range(2) for b in range(2)]
        assert finite_group_invariants(elements, _cyclic(2)) == (2, 2)

    def test_counted_trivial(self):
        assert finite_group_invariants([(0,)], _cyclic(5)) == ()

    def test_subgroup_closure(self):
        add = lambda a, b: ((a[0] + b[0]) % 6,)  # noqa: E731
        assert subgroup_closure([(2,)], add, (0,)) == {(0,), (2,), (4,)}

    def test_integer_kernel(self):
        kernel = integer_kernel([[1, 1]], 2)
        assert len(kernel) == 1
        assert sum(kernel[0]) == 0
        assert any(kernel[0])
