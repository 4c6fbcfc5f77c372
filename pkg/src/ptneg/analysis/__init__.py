"""Bound verification, family sweeps, searches and related experiments."""

from .bounds import BoundReport, bound_report, bound_suite, verify_neg_count_bound, verify_spectral_range
from .product import ProductVectorResult, find_product_vector
from .robustness import RobustnessReport, npt_robustness_check
from .search import SearchResult, search_max_neg
from .sweep import SweepRecord, SweepSpec, three_qutrit_grid_spec, cyclic4_sample_spec, histogram, sweep

__all__ = [
    "BoundReport",
    "ProductVectorResult",
    "RobustnessReport",
    "SearchResult",
    "SweepRecord",
    "SweepSpec",
    "bound_report",
    "three_qutrit_grid_spec",
    "cyclic4_sample_spec",
    "find_product_vector",
    "histogram",
    "npt_robustness_check",
    "search_max_neg",
    "sweep",
    "bound_suite",
    "verify_neg_count_bound",
    "verify_spectral_range",
]
