from affgrass.hierarchy.models import EntryStatus, WeightHierarchy
from affgrass.hierarchy.enumeration import (
    DEFAULT_SUBSPACE_BUDGET,
    PivotPattern,
    check_subspace_budget,
    enumerate_subspaces,
    gaussian_binomial,
    pivot_patterns,
)
from affgrass.hierarchy.search import SearchResult, exact_dr, exact_hierarchy, search_min_support
from affgrass.hierarchy.witnesses import (
    Witness,
    inclusion_exclusion_union,
    initial_family,
    witness_d2_upper,
    witness_initial,
    witness_terminal,
    zero_set_count,
)

__all__ = [
    "DEFAULT_SUBSPACE_BUDGET",
    "EntryStatus",
    "PivotPattern",
    "SearchResult",
    "WeightHierarchy",
    "Witness",
    "check_subspace_budget",
    "enumerate_subspaces",
    "exact_dr",
    "exact_hierarchy",
    "gaussian_binomial",
    "inclusion_exclusion_union",
    "initial_family",
    "pivot_patterns",
    "search_min_support",
    "witness_d2_upper",
    "witness_initial",
    "witness_terminal",
    "zero_set_count",
]
