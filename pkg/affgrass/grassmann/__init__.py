"""Point space, minor basis and close minor families of C^A(ℓ, m; h)."""

from affgrass.grassmann.counting import (
    DEFAULT_CHUNK,
    DEFAULT_POINT_BUDGET,
    check_point_budget,
    count_common_zeros,
    count_nonvanishing,
    nonvanishing_mask,
    polynomial_values,
    subfamilies,
)
from affgrass.grassmann.minors import (
    MinorIndex,
    basis_position,
    evaluate_minor,
    leading_principal,
    lemma_family_A,
    lemma_family_B,
    minor_basis,
    minor_values,
    variable,
)
from affgrass.grassmann.params import CodeParams, code_params, dimension
from affgrass.grassmann.points import (
    MatrixPoint,
    index_of_point,
    iter_point_blocks,
    point_from_index,
    points_block,
)

__all__ = [
    "DEFAULT_CHUNK",
    "DEFAULT_POINT_BUDGET",
    "CodeParams",
    "check_point_budget",
    "MatrixPoint",
    "MinorIndex",
    "basis_position",
    "code_params",
    "count_common_zeros",
    "count_nonvanishing",
    "dimension",
    "evaluate_minor",
    "index_of_point",
    "iter_point_blocks",
    "leading_principal",
    "lemma_family_A",
    "lemma_family_B",
    "minor_basis",
    "minor_values",
    "nonvanishing_mask",
    "point_from_index",
    "points_block",
    "polynomial_values",
    "subfamilies",
    "variable",
]
