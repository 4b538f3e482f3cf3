"""Contains command classes for single runs & full enumerations of the Ω subroutine."""

from collections.abc import Sequence

__all__: Sequence[str] = ("OmegaCommand", "add_omega_options")

from typing import TYPE_CHECKING

from qsim import OmegaMode, OmegaOutcome, OracleKind, omega
from utils import BaseCommand, CommandChecks, capture_domain_error

if TYPE_CHECKING:
    import argparse

    from qsim import OmegaOutcomeSet
    from utils import RunConfig


def add_omega_options(parser: "argparse.ArgumentParser") -> None:
    """Declare how Ω is run: sampled or fully enumerated, with which arithmetic oracle."""
    parser.add_argument(
        "--mode",
        type=OmegaMode,
        choices=tuple(OmegaMode),
        default=OmegaMode.SAMPLE,
        help="sample one measurement record per run or enumerate every outcome",
    )
    parser.add_argument(
        "--oracle",
        type=OracleKind,
        choices=tuple(OracleKind),
        default=OracleKind.CLASSICAL,
        help="evaluate U1 & U2 classically or through the reversible networks",
    )


class OmegaCommand(BaseCommand):
    """Command class that defines the "omega" command and its run method."""

    NAME = "omega"
    HELP = "Run the Ω subroutine on an odd N & classify its outcome."

    @classmethod
    def add_arguments(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument("modulus", metavar="N", type=CommandChecks.odd_modulus)
        add_omega_options(parser)

    @capture_domain_error
    def run(self, config: "RunConfig") -> str | None:
        """Definition & run method of the "omega" command."""
        result: OmegaOutcome | OmegaOutcomeSet = omega(
            config.require_operand("modulus"),
            mode=OmegaMode(config.mode),
            seed=config.seed,
            oracle=OracleKind(config.oracle),
        )

        if isinstance(result, OmegaOutcome):
            return self.render(
                config,
                payload=result.to_dict(),
                table=(
                    "N,seed,classification,factor,m1,m2\n"
                    f"{result.modulus},{result.seed},{result.kind.value},"
                    f"{'' if result.factor is None else result.factor},{result.m1_value},"
                    f"{'' if result.m2_value is None else result.m2_value}\n"
                ),
            )

        return self.render(config, payload=result.to_dict(), table=result.to_csv())
