"""Cartan matrices of the simple types in Bourbaki labelling.

Entry ``[i][j]`` is ``<alpha_j, alpha_i^vee>`` (Kac convention), so row ``i`` is
the simple coroot ``alpha_i^vee`` written in fundamental-coweight coordinates.
"""

from __future__ import annotations

from math import factorial

from src.errors import UnsupportedType

SERIES = ("A", "B", "C", "D", "E", "F", "G")
MAX_TOTAL_RANK = 8

_EXCEPTIONAL_ORDERS = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}


def validate_type(series: str, rank: int) -> None:
    """Reject labels outside the supported list; rank conventions avoid duplicate types."""
    if series not in SERIES:
        raise UnsupportedType(f"unknown Dynkin series '{series}', expected one of {', '.join(SERIES)}")
    minimum = {"A": 1, "B": 2, "C": 2, "D": 4}
    if series in minimum:
        if rank < minimum[series]:
            raise UnsupportedType(f"type {series}{rank} needs rank >= {minimum[series]}")
        return
    if (series, rank) not in _EXCEPTIONAL_ORDERS:
        raise UnsupportedType(f"type {series}{rank} does not exist")


def cartan_matrix(series: str, rank: int) -> tuple[tuple[int, ...], ...]:
    validate_type(series, rank)
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if series == "A":
        for i in range(rank - 1):
            link(i, i + 1)
    elif series in ("B", "C"):
        for i in range(rank - 2):
            link(i, i + 1)
        # B: final root short, C: final root long
        if series == "B":
            link(rank - 2, rank - 1, -1, -2)
        else:
            link(rank - 2, rank - 1, -2, -1)
    elif series == "D":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 3, rank - 1)
    elif series == "E":
        # 1-3-4-5-6(-7-8) with 2 hanging off 4
        link(0, 2)
        link(1, 3)
        for i in range(2, rank - 1):
            link(i, i + 1)
    elif series == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif series == "G":
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in a)


def weyl_group_order(series: str, rank: int) -> int:
    """Classical order formula, used as an enumeration budget check and test oracle."""
    validate_type(series, rank)
    if series == "A":
        return factorial(rank + 1)
    if series in ("B", "C"):
        return 2**rank * factorial(rank)
    if series == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return _EXCEPTIONAL_ORDERS[(series, rank)]


def block_diagonal(blocks: list[tuple[tuple[int, ...], ...]]) -> tuple[tuple[int, ...], ...]:
    size = sum(len(b) for b in blocks)
    out = [[0] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, val in enumerate(row):
                out[offset + i][offset + j] = val
        offset += len(block)
    return tuple(tuple(row) for row in out)
