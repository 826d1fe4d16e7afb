from affgrass.verification.grid import VERIFY_FIELDS, VERIFY_MAX_LENGTH, acceptance_params, parameter_grid
from affgrass.verification.suites import SUITES, SuiteContext, run_suite

__all__ = [
    "SUITES",
    "SuiteContext",
    "VERIFY_FIELDS",
    "VERIFY_MAX_LENGTH",
    "acceptance_params",
    "parameter_grid",
    "run_suite",
]
