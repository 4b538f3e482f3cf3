"""The recursive decomposition algorithm & its probability bounds."""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "EULER_MASCHERONI",
    "SIMPLIFIED_BOUND_MINIMUM",
    "BoundReport",
    "DecompositionTrace",
    "NodeReason",
    "SplitResult",
    "TraceCoverage",
    "bound_report_csv",
    "combine",
    "decompose",
    "empirical_failure_rates",
    "explore_all_traces",
    "iteration_bound",
    "iterations_for_confidence",
    "phi_lower_bound",
    "rounds_to_square_part",
    "split",
)


from driver.bounds import (
    EULER_MASCHERONI,
    SIMPLIFIED_BOUND_MINIMUM,
    BoundReport,
    bound_report_csv,
    empirical_failure_rates,
    iteration_bound,
    iterations_for_confidence,
    phi_lower_bound,
)
from driver.recursion import (
    DecompositionTrace,
    NodeReason,
    SplitResult,
    TraceCoverage,
    combine,
    decompose,
    explore_all_traces,
    rounds_to_square_part,
    split,
)
