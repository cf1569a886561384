from src.components.arrows import ArrowEdge, ArrowGraph, arrows
from src.components.hodge_newton import HNStatus, hn_status
from src.components.leaves import Leaf, SPlus, full_scan, s_leaf, s_plus
from src.components.levi import LeviData, Pi1MJElem, j0_j1, levi_J_and_normalize
from src.components.orbits import OrbitInfo, OrbitType, c_set, orbit_info
from src.components.pi0 import Pi0Prediction, pi0_prediction
from src.components.report import SCHEMA, ComponentReport, analyze

__all__ = [
    "SCHEMA",
    "ArrowEdge",
    "ArrowGraph",
    "ComponentReport",
    "HNStatus",
    "Leaf",
    "LeviData",
    "OrbitInfo",
    "OrbitType",
    "Pi0Prediction",
    "Pi1MJElem",
    "SPlus",
    "analyze",
    "arrows",
    "c_set",
    "full_scan",
    "hn_status",
    "j0_j1",
    "levi_J_and_normalize",
    "orbit_info",
    "pi0_prediction",
    "s_leaf",
    "s_plus",
]
