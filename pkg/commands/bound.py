"""Contains command classes for the failure bounds on repeated Ω runs."""

from collections.abc import Sequence

__all__: Sequence[str] = ("BoundCommand",)

from typing import TYPE_CHECKING

from driver import (
    SIMPLIFIED_BOUND_MINIMUM,
    BoundReport,
    bound_report_csv,
    empirical_failure_rates,
    iteration_bound,
    iterations_for_confidence,
    phi_lower_bound,
)
from utils import BaseCommand, CommandChecks, capture_domain_error

if TYPE_CHECKING:
    import argparse

    from utils import RunConfig


class BoundCommand(BaseCommand):
    """Command class that defines the "bound" command and its run method."""

    NAME = "bound"
    HELP = "Bound the probability that k runs of Ω on N all miss the square part."

    @classmethod
    def add_arguments(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument("modulus", metavar="N", type=CommandChecks.positive)
        parser.add_argument("--k", type=CommandChecks.natural, default=1)
        parser.add_argument(
            "--runs",
            type=CommandChecks.positive,
            help="also measure the empirical failure rates over this many seeded runs",
        )

    @capture_domain_error
    def run(self, config: "RunConfig") -> str | None:
        """Definition & run method of the "bound" command."""
        modulus: int = config.require_operand("modulus")
        reports: list[BoundReport] = [iteration_bound(modulus, k) for k in range(config.k + 1)]

        payload: dict[str, object] = {
            "N": modulus,
            "phi_lower_bound": phi_lower_bound(modulus),
            "iterations_for_99_percent": (
                iterations_for_confidence(modulus)
                if modulus >= SIMPLIFIED_BOUND_MINIMUM
                else None
            ),
            "bounds": [report.to_dict() for report in reports],
        }

        if config.runs is not None and config.k >= 1:
            payload["empirical"] = {
                "runs": config.runs,
                "seed": config.seed,
                "failure_rates": list(
                    empirical_failure_rates(modulus, config.runs, config.k, config.seed)
                ),
            }

        return self.render(config, payload=payload, table=bound_report_csv(reports))
