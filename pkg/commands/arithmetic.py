"""Contains command classes for the classical binary Jacobi & GCD algorithms."""

from collections.abc import Sequence

__all__: Sequence[str] = ("GcdCommand", "JacobiCommand")

from typing import TYPE_CHECKING

from numtheory import JacobiValue, binary_gcd, jacobi_binary
from utils import BaseCommand, CommandChecks, capture_domain_error

if TYPE_CHECKING:
    import argparse

    from utils import RunConfig


class JacobiCommand(BaseCommand):
    """Command class that defines the "jacobi" command and its run method."""

    NAME = "jacobi"
    HELP = "Evaluate the Jacobi symbol χ_N(m) with the binary Jacobi algorithm."

    @classmethod
    def add_arguments(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument("m", type=CommandChecks.natural)
        parser.add_argument("modulus", metavar="N", type=CommandChecks.odd_modulus)

    @capture_domain_error
    def run(self, config: "RunConfig") -> str | None:
        """Definition & run method of the "jacobi" command."""
        m: int = config.require_operand("m")
        modulus: int = config.require_operand("modulus")
        value: JacobiValue = jacobi_binary(m, modulus)

        return self.render(
            config,
            text=str(value),
            payload={"m": m, "N": modulus, "jacobi": value},
            table=f"m,N,jacobi\n{m},{modulus},{value}\n",
        )


class GcdCommand(BaseCommand):
    """Command class that defines the "gcd" command and its run method."""

    NAME = "gcd"
    HELP = "Compute gcd(u, v) with the three-phase binary GCD algorithm."

    @classmethod
    def add_arguments(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument("u", type=CommandChecks.natural)
        parser.add_argument("v", type=CommandChecks.natural)

    @capture_domain_error
    def run(self, config: "RunConfig") -> str | None:
        """Definition & run method of the "gcd" command."""
        u: int = config.require_operand("u")
        v: int = config.require_operand("v")
        value: int = binary_gcd(u, v)

        return self.render(
            config,
            text=str(value),
            payload={"u": u, "v": v, "gcd": value},
            table=f"u,v,gcd\n{u},{v},{value}\n",
        )
