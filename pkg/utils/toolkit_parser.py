"""Custom argument parser that registers every command & dispatches one command line."""

from collections.abc import Sequence

__all__: Sequence[str] = ("ToolkitParser",)

import argparse
import logging
from logging import Logger
from pathlib import Path
from typing import TYPE_CHECKING, Final

from utils.command_checks import CommandChecks
from utils.run_config import OutputFormat, RunConfig

if TYPE_CHECKING:
    from collections.abc import Iterable

    from utils.base_command import BaseCommand

logger: Logger = logging.getLogger("gauss-squarefree")


class ToolkitParser(argparse.ArgumentParser):
    """
    Subclass of the standard argument parser holding one sub-parser per command.

    Options shared by every command (seed, output format, output path & traceback display)
    are declared once on a parent parser.
    """

    def __init__(self) -> None:
        """Initialise a new parser with no commands registered yet."""
        super().__init__(
            prog="gauss-squarefree",
            description=(
                "Simulate & verify the deterministic quantum square-free decomposition "
                "of odd integers."
            ),
        )

        self._commands: dict[str, BaseCommand] = {}

        self._shared_options: argparse.ArgumentParser = argparse.ArgumentParser(add_help=False)
        self._shared_options.add_argument(
            "--seed",
            type=CommandChecks.seed,
            default=0,
            help="seed of every random choice (default: 0)",
        )
        self._shared_options.add_argument(
            "--format",
            dest="output_format",
            type=OutputFormat,
            choices=tuple(OutputFormat),
            help="serialisation of the result",
        )
        self._shared_options.add_argument(
            "--out",
            dest="output",
            type=Path,
            help="write the result to this file instead of stdout",
        )
        self._shared_options.add_argument(
            "--traceback",
            dest="show_traceback",
            action="store_true",
            help="show the traceback of any error",
        )

        self._subparsers = self.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add_command(self, command: "BaseCommand") -> None:
        """Register a command under its name, with its own operands & the shared options."""
        if command.NAME in self._commands:
            DUPLICATE_COMMAND_MESSAGE: Final[str] = (
                f"A command named {command.NAME!r} is already registered."
            )
            raise ValueError(DUPLICATE_COMMAND_MESSAGE)

        command_parser: argparse.ArgumentParser = self._subparsers.add_parser(
            command.NAME,
            help=command.HELP,
            description=command.HELP,
            parents=[self._shared_options],
        )
        command.add_arguments(command_parser)

        self._commands[command.NAME] = command

    def add_commands(self, commands: "Iterable[BaseCommand]") -> None:
        command: BaseCommand
        for command in commands:
            self.add_command(command)

    @property
    def command_names(self) -> tuple[str, ...]:
        return tuple(self._commands)

    def dispatch(self, argv: Sequence[str]) -> int:
        """
        Parse one command line & run the selected command.

        Returns exit code 0 on success, 1 when the command reported a domain error &
        2 when the command line itself was unusable.
        """
        e: SystemExit
        try:
            namespace: argparse.Namespace = self.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 2

        config: RunConfig = RunConfig.from_namespace(namespace)
        logger.debug("Dispatching %r", config)

        return self._commands[config.command].execute(config)
