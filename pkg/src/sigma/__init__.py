from src.sigma.conjugation import (
    MoveKind,
    PartialConjugation,
    conj_move,
    conjugacy_class,
    is_k_minimal,
    partial_conjugation,
    sigma_conjugate,
    stable_subset,
)
from src.sigma.flat import FlatInvariant, flat_invariant, min_z0
from src.sigma.frobenius import PRESETS, Frobenius, make_frobenius
from src.sigma.newton import NewtonKottwitz, SemiStandard, is_semi_standard, newton_point, sigma_average
from src.sigma.permissible import Permissible, permissible, permissible_blind

__all__ = [
    "PRESETS",
    "FlatInvariant",
    "Frobenius",
    "MoveKind",
    "NewtonKottwitz",
    "PartialConjugation",
    "Permissible",
    "SemiStandard",
    "conj_move",
    "conjugacy_class",
    "flat_invariant",
    "is_k_minimal",
    "is_semi_standard",
    "make_frobenius",
    "min_z0",
    "newton_point",
    "partial_conjugation",
    "permissible",
    "permissible_blind",
    "sigma_average",
    "sigma_conjugate",
    "stable_subset",
]
