"""
Contains all commands.

Commands are registered onto the ToolkitParser instance. There are separate command classes
for each activity.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "BenchCostsCommand",
    "BoundCommand",
    "CircuitCommand",
    "DecomposeCommand",
    "GaussCommand",
    "GcdCommand",
    "JacobiCommand",
    "OmegaCommand",
    "SweepCommand",
    "setup",
)

from typing import TYPE_CHECKING, TextIO

from commands.arithmetic import GcdCommand, JacobiCommand
from commands.bench_costs import BenchCostsCommand
from commands.bound import BoundCommand
from commands.circuit import CircuitCommand
from commands.decompose import DecomposeCommand
from commands.gauss import GaussCommand
from commands.omega import OmegaCommand
from commands.sweep import SweepCommand

if TYPE_CHECKING:
    from collections.abc import Iterable

    from utils import BaseCommand, ToolkitParser


def setup(parser: "ToolkitParser", stream: TextIO | None = None, error_stream: TextIO | None = None) -> None:  # noqa: E501
    """Add all the commands to the parser, at start-up."""
    commands: Iterable[type[BaseCommand]] = (
        DecomposeCommand,
        OmegaCommand,
        GaussCommand,
        JacobiCommand,
        GcdCommand,
        CircuitCommand,
        BoundCommand,
        BenchCostsCommand,
        SweepCommand,
    )

    parser.add_commands(command(stream, error_stream) for command in commands)
