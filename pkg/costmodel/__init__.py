"""Closed-form cost curves comparing the decomposition against factoring-based routes."""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "MINIMUM_DIGITS",
    "CostPoint",
    "CurveLayout",
    "cost_nfs",
    "cost_ours",
    "cost_points",
    "cost_ratio",
    "cost_shor",
    "crossover_digits",
    "emit_curves",
    "plot_cost_curves",
    "speedup_over_shor",
)


from costmodel.curves import (
    MINIMUM_DIGITS,
    CostPoint,
    CurveLayout,
    cost_nfs,
    cost_ours,
    cost_points,
    cost_ratio,
    cost_shor,
    crossover_digits,
    emit_curves,
    speedup_over_shor,
)
from costmodel.plot import plot_cost_curves
