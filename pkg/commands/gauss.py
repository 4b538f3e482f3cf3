"""Contains command classes for evaluating single Gauss sums & full Gauss-sum tables."""

from collections.abc import Sequence

__all__: Sequence[str] = ("GaussCommand",)

from typing import TYPE_CHECKING

from gauss import GaussSumMethod, gauss_sum, gauss_table, verify_dichotomy
from utils import BaseCommand, CommandChecks, capture_domain_error, format_complex, format_real

if TYPE_CHECKING:
    import argparse

    from gauss import DichotomyReport, GaussSumTable
    from utils import RunConfig


class GaussCommand(BaseCommand):
    """Command class that defines the "gauss" command and its run method."""

    NAME = "gauss"
    HELP = "Evaluate G(a, χ_N) for one a, or tabulate it for every a in [0, N)."

    @classmethod
    def add_arguments(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument("modulus", metavar="N", type=CommandChecks.odd_modulus)
        parser.add_argument("a", nargs="?", type=CommandChecks.natural)
        parser.add_argument(
            "--method",
            type=GaussSumMethod,
            choices=tuple(GaussSumMethod),
            default=GaussSumMethod.DIRECT,
            help="how a full table is evaluated",
        )

    @capture_domain_error
    def run(self, config: "RunConfig") -> str | None:
        """Definition & run method of the "gauss" command."""
        modulus: int = config.require_operand("modulus")

        if config.a is not None:
            value: complex = gauss_sum(config.a, modulus)

            return self.render(
                config,
                text=format_complex(value),
                payload={"N": modulus, "a": config.a, "re": value.real, "im": value.imag},
                table=(
                    f"a,re,im\n{config.a},{format_real(value.real)},"
                    f"{format_real(value.imag)}\n"
                ),
            )

        method: GaussSumMethod = GaussSumMethod(config.method)
        table: GaussSumTable = gauss_table(modulus, method)
        report: DichotomyReport = verify_dichotomy(modulus, method)

        return self.render(
            config,
            payload={
                "N": modulus,
                "method": method.value,
                "dichotomy": report.to_dict(),
                "parseval_defect": table.parseval_defect(),
                "sums": [
                    {"a": a, "re": float(entry.real), "im": float(entry.imag)}
                    for a, entry in enumerate(table.values.tolist())
                ],
            },
            table=table.to_csv(),
        )
