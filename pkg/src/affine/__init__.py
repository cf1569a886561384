from src.affine.element import AffRoot, ExtAffElem, SimpleReflection
from src.affine.group import AffineWeylGroup, affine_group
from src.affine.notation import format_elem, parse_elem
from src.affine.pi1 import Pi1Group, permute_coweight

__all__ = [
    "AffRoot",
    "AffineWeylGroup",
    "affine_group",
    "ExtAffElem",
    "Pi1Group",
    "SimpleReflection",
    "format_elem",
    "parse_elem",
    "permute_coweight",
]
