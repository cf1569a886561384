from src.rootdata.datum import Component, CoweightFlags, LeviData, OrderFlags, RootDatum
from src.rootdata.parse import build_root_datum, datum_to_json, parse_datum_spec
from src.rootdata.weyl import WeylElem, WeylGroup

__all__ = [
    "Component",
    "CoweightFlags",
    "LeviData",
    "OrderFlags",
    "RootDatum",
    "WeylElem",
    "WeylGroup",
    "build_root_datum",
    "datum_to_json",
    "parse_datum_spec",
]
