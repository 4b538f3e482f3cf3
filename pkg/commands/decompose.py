"""Contains command classes for the recursive square-free decomposition."""

from collections.abc import Sequence

__all__: Sequence[str] = ("DecomposeCommand",)

import argparse
from typing import TYPE_CHECKING

from commands.omega import add_omega_options
from driver import decompose
from qsim import OmegaMode, OracleKind
from utils import BaseCommand, CommandChecks, capture_domain_error

if TYPE_CHECKING:
    from driver import DecompositionTrace
    from numtheory import SquareFreeDecomposition
    from utils import RunConfig


class DecomposeCommand(BaseCommand):
    """Command class that defines the "decompose" command and its run method."""

    NAME = "decompose"
    HELP = "Find the square-free decomposition N = r·s² by recursing on Ω."

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("modulus", metavar="N", type=CommandChecks.positive)
        add_omega_options(parser)
        parser.add_argument(
            "--early-termination",
            action=argparse.BooleanOptionalAction,
            help="stop a branch as soon as M2 reveals a square (default: EARLY_TERMINATION)",
        )

    @capture_domain_error
    def run(self, config: "RunConfig") -> str | None:
        """Definition & run method of the "decompose" command."""
        modulus: int = config.require_operand("modulus")

        result: tuple[SquareFreeDecomposition, DecompositionTrace] = decompose(
            modulus,
            mode=OmegaMode(config.mode),
            seed=config.seed,
            early_termination=config.early_termination,
            oracle=OracleKind(config.oracle),
        )
        decomposition: SquareFreeDecomposition = result[0]
        trace: DecompositionTrace = result[1]

        return self.render(
            config,
            payload={
                "N": modulus,
                "r": decomposition.r,
                "s": decomposition.s,
                "mode": config.mode,
                "seed": config.seed,
                "omega_calls": trace.omega_calls(),
                "depth": trace.depth(),
                "trace": trace.to_dict(),
            },
            table=f"N,r,s\n{modulus},{decomposition.r},{decomposition.s}\n",
        )
