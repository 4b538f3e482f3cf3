"""
The validated configuration of one command-line run.

Every command reads its operands from this single object, rather than from the raw
argparse namespace, so that commands can also be driven directly from tests.
"""

from collections.abc import Sequence

__all__: Sequence[str] = ("OutputFormat", "RunConfig")

import dataclasses
from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING, Final

from exceptions import InvalidRunConfigError

if TYPE_CHECKING:
    import argparse
    from pathlib import Path


class OutputFormat(StrEnum):
    """Serialisation of a command's result; plain text is used when none is requested."""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"


@dataclass(frozen=True, slots=True)
class RunConfig:
    """One field per command-line operand or option; unused fields keep their defaults."""

    command: str
    modulus: int | None = None
    m: int | None = None
    a: int | None = None
    u: int | None = None
    v: int | None = None
    kind: str | None = None
    mode: str = "sample"
    oracle: str = "classical"
    method: str = "direct"
    early_termination: bool | None = None
    seed: int = 0
    bits: int | None = None
    circuit_modulus: int | None = None
    verify: bool = False
    clean: bool = True
    netlist: "Path | None" = None
    k: int = 1
    runs: int | None = None
    min_digits: int = 2
    max_digits: int = 1000
    step: int = 1
    nfs_constant: float | None = None
    layout: str = "csv"
    plot: "Path | None" = None
    target: str | None = None
    max_n: int | None = None
    max_bits: int | None = None
    seeds: int = 100
    output: "Path | None" = None
    output_format: OutputFormat | None = None
    show_traceback: bool = False

    def __post_init__(self) -> None:
        """Reject seeds outside the unsigned 64-bit range."""
        if not 0 <= self.seed < 2**64:
            INVALID_SEED_MESSAGE: Final[str] = (
                f"The seed must be an unsigned 64-bit integer, not {self.seed}."
            )
            raise InvalidRunConfigError(INVALID_SEED_MESSAGE)

    @classmethod
    def from_namespace(cls, namespace: "argparse.Namespace") -> "RunConfig":
        """Collect every field of this config from the parsed command line."""
        return cls(
            **{
                field.name: getattr(namespace, field.name)
                for field in dataclasses.fields(cls)
                if getattr(namespace, field.name, None) is not None
            }
        )

    def require_operand(self, name: str) -> int:
        """Return the named integer operand, which the command line must have provided."""
        value: object = getattr(self, name)

        if not isinstance(value, int) or isinstance(value, bool):
            MISSING_OPERAND_MESSAGE: Final[str] = (
                f"The {self.command!r} command needs the operand {name!r}."
            )
            raise InvalidRunConfigError(MISSING_OPERAND_MESSAGE)

        return value
