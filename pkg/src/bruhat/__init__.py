from src.bruhat.admissible import AdmissibleSet, adm_by_ball_filter, adm_set, distinct_test, is_sigma_stable
from src.bruhat.order import BruhatOrder, elem_sort_key

__all__ = [
    "AdmissibleSet",
    "BruhatOrder",
    "adm_by_ball_filter",
    "adm_set",
    "distinct_test",
    "elem_sort_key",
    "is_sigma_stable",
]
