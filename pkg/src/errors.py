"""Exception hierarchy shared by every adlv package."""

from __future__ import annotations


class AdlvError(Exception):
    """Base class for all toolkit errors."""


# Input validation


class UnsupportedType(AdlvError, ValueError):
    pass


class RankTooLarge(AdlvError, ValueError):
    pass


class NotARoot(AdlvError, ValueError):
    pass


class NotACoroot(AdlvError, ValueError):
    pass


class NotDominant(AdlvError, ValueError):
    pass


class DatumMismatch(AdlvError, ValueError):
    pass


class NotAdmissible(AdlvError, ValueError):
    pass


class NotDiagramAutomorphism(AdlvError, ValueError):
    pass


class NotInOrbit(AdlvError, ValueError):
    pass


class NotSimplyLaced(AdlvError, ValueError):
    pass


class NotIrreducible(AdlvError, ValueError):
    pass


class EmptyX(AdlvError, ValueError):
    pass


class UnknownLemma(AdlvError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown lemma"


class ConfigParse(AdlvError, ValueError):
    pass


class NotationError(AdlvError, ValueError):
    pass


# Search and budgets


class BudgetExceeded(AdlvError, RuntimeError):
    pass


class PlateauExhausted(AdlvError, RuntimeError):
    """Partial conjugation found neither a descent nor a terminal form on a plateau."""


class NormalizationFailed(AdlvError, RuntimeError):
    pass


class LeafEmpty(AdlvError, RuntimeError):
    pass
