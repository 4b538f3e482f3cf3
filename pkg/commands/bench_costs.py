"""Contains command classes for emitting & plotting the cost curves."""

from collections.abc import Sequence

__all__: Sequence[str] = ("BenchCostsCommand",)

from pathlib import Path
from typing import TYPE_CHECKING

from costmodel import (
    MINIMUM_DIGITS,
    CostPoint,
    CurveLayout,
    cost_points,
    crossover_digits,
    emit_curves,
    plot_cost_curves,
    speedup_over_shor,
)
from utils import BaseCommand, CommandChecks, capture_domain_error

if TYPE_CHECKING:
    import argparse

    from utils import RunConfig


class BenchCostsCommand(BaseCommand):
    """Command class that defines the "bench-costs" command and its run method."""

    NAME = "bench-costs"
    HELP = "Emit the log10 cost curves of the three decomposition routes."

    @classmethod
    def add_arguments(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument("--min-digits", type=CommandChecks.positive, default=MINIMUM_DIGITS)
        parser.add_argument("--max-digits", type=CommandChecks.positive, default=1000)
        parser.add_argument("--step", type=CommandChecks.positive, default=1)
        parser.add_argument(
            "--nfs-constant",
            type=float,
            help="constant c of the number field sieve curve (default: NFS_CONSTANT)",
        )
        parser.add_argument("--layout", choices=tuple(CurveLayout), default=CurveLayout.CSV)
        parser.add_argument("--plot", type=Path, help="also draw the curves to this PNG file")

    @capture_domain_error
    def run(self, config: "RunConfig") -> str | None:
        """Definition & run method of the "bench-costs" command."""
        points: tuple[CostPoint, ...] = cost_points(
            config.min_digits,
            config.max_digits,
            config.step,
            config.nfs_constant,
        )

        if config.plot is not None:
            plot_cost_curves(points, config.plot)

        return self.render(
            config,
            text=emit_curves(points, CurveLayout(config.layout)),
            payload={
                "crossover_digits": crossover_digits(config.nfs_constant, config.max_digits),
                "speedup_over_shor": speedup_over_shor(config.max_digits),
                "points": [point.to_dict() for point in points],
            },
            table=emit_curves(points),
        )
