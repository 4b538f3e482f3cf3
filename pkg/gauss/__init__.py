"""Gauss sums of the Jacobi character & the identities behind the square-free dichotomy."""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "RATIO_IDENTITY_TOLERANCE",
    "SINGLE_SUM_TOLERANCE",
    "DichotomyReport",
    "GaussSumMethod",
    "GaussSumTable",
    "ReductionReport",
    "character_table",
    "epsilon",
    "gauss_closed_form",
    "gauss_reduction_check",
    "gauss_sum",
    "gauss_table",
    "square_divisors",
    "symmetry_defects",
    "verify_closed_form",
    "verify_dichotomy",
    "verify_reduction",
)


from gauss.identities import (
    RATIO_IDENTITY_TOLERANCE,
    SINGLE_SUM_TOLERANCE,
    DichotomyReport,
    ReductionReport,
    epsilon,
    gauss_closed_form,
    gauss_reduction_check,
    square_divisors,
    symmetry_defects,
    verify_closed_form,
    verify_dichotomy,
    verify_reduction,
)
from gauss.sums import (
    GaussSumMethod,
    GaussSumTable,
    character_table,
    gauss_sum,
    gauss_table,
)
