from affgrass.formulas.weights import (
    conjecture_d2_value,
    gl_order,
    griesmer_wei,
    initial_domain,
    initial_dr_formula,
    intersection_count_formula,
    min_distance_formula,
    terminal_domain,
    terminal_dr_formula,
)
from affgrass.formulas.bounds import (
    BoundViolation,
    check_monotone,
    formula_hierarchy,
    griesmer_wei_check,
    tsfasman_vladut_check,
)
from affgrass.formulas.duality import (
    DualWeightEntry,
    DualWeightReport,
    dual_hierarchy_from_primal,
    dual_initial_formula,
    dual_initial_lookup,
    dual_initial_value,
    dual_recursive,
    dual_terminal_domain,
    dual_terminal_formula,
    dual_terminal_lookup,
    dual_terminal_recursive,
    dual_weight_report,
    g_sequence,
    h_sequence,
    q_sequence,
    recursive_initial_values,
)
from affgrass.formulas.table import PUBLISHED_TABLE, TABLE_Q, published_table, table1, table_csv, table_mismatches

__all__ = [
    "BoundViolation",
    "DualWeightEntry",
    "DualWeightReport",
    "PUBLISHED_TABLE",
    "TABLE_Q",
    "check_monotone",
    "conjecture_d2_value",
    "dual_hierarchy_from_primal",
    "dual_initial_formula",
    "dual_initial_lookup",
    "dual_initial_value",
    "dual_recursive",
    "dual_terminal_domain",
    "dual_terminal_formula",
    "dual_terminal_lookup",
    "dual_terminal_recursive",
    "dual_weight_report",
    "formula_hierarchy",
    "g_sequence",
    "gl_order",
    "griesmer_wei",
    "griesmer_wei_check",
    "h_sequence",
    "initial_domain",
    "initial_dr_formula",
    "intersection_count_formula",
    "min_distance_formula",
    "published_table",
    "q_sequence",
    "recursive_initial_values",
    "table1",
    "table_csv",
    "table_mismatches",
    "terminal_domain",
    "terminal_dr_formula",
    "tsfasman_vladut_check",
]
