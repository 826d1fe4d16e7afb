"""Affine Grassmann codes over small finite fields.

Builds C^A(ℓ, m; h), computes its higher weights exhaustively and checks the
closed forms for the initial and terminal weights of the code and its dual.
"""

from affgrass.codes import LinearCode, build_code, dual_code
from affgrass.errors import AffGrassError, BudgetExceeded
from affgrass.formulas import dual_weight_report, formula_hierarchy, table1
from affgrass.grassmann import CodeParams, code_params
from affgrass.hierarchy import WeightHierarchy, exact_hierarchy, search_min_support

__version__ = "0.1.0"

__all__ = [
    "AffGrassError",
    "BudgetExceeded",
    "CodeParams",
    "LinearCode",
    "WeightHierarchy",
    "build_code",
    "code_params",
    "dual_code",
    "dual_weight_report",
    "exact_hierarchy",
    "formula_hierarchy",
    "search_min_support",
    "table1",
]
