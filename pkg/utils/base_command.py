"""Base class of every command-line activity, with shared rendering & error reporting."""

from collections.abc import Sequence

__all__: Sequence[str] = ("BaseCommand",)

import abc
import json
import logging
import sys
from collections.abc import Mapping
from logging import Logger
from typing import TYPE_CHECKING, ClassVar, Final, TextIO, final

from exceptions import InvalidRunConfigError
from utils.output_senders import make_output_sender
from utils.run_config import OutputFormat, RunConfig

if TYPE_CHECKING:
    import argparse

    from utils.output_senders import OutputSenderComponent

logger: Logger = logging.getLogger("gauss-squarefree")


class BaseCommand(abc.ABC):
    """Base command class that renders results & reports failures of one activity."""

    ERROR_ACTIVITIES: Final[Mapping[str, str]] = {
        "decompose": "decompose the given number",
        "omega": "run the Ω subroutine",
        "gauss": "evaluate the Gauss sum",
        "jacobi": "evaluate the Jacobi symbol",
        "gcd": "compute the greatest common divisor",
        "circuit": "build the reversible circuit",
        "bound": "bound the number of Ω iterations",
        "bench-costs": "emit the cost curves",
        "sweep": "run the verification sweep",
    }

    NAME: ClassVar[str]
    HELP: ClassVar[str]

    def __init__(self, stream: TextIO | None = None, error_stream: TextIO | None = None) -> None:  # noqa: E501
        """Initialise a new command, writing to the given streams (stdout & stderr otherwise)."""
        self.stream: TextIO | None = stream
        self.error_stream: TextIO = sys.stderr if error_stream is None else error_stream

    @classmethod
    @abc.abstractmethod
    def add_arguments(cls, parser: "argparse.ArgumentParser") -> None:
        """Declare the operands & options of this command on its own sub-parser."""

    @abc.abstractmethod
    def run(self, config: RunConfig) -> str | None:
        """
        Subclass implementation of `execute()` method.

        Implementations return the rendered output, or `None` once a failure was reported.
        """

    @final
    def execute(self, config: RunConfig) -> int:
        """Run this command & send its output, returning the process exit code."""
        output: str | None = self.run(config)
        if output is None:
            return 1

        sender: OutputSenderComponent = make_output_sender(config.output, self.stream)
        sender.send(output)

        return 0

    @staticmethod
    def render(config: RunConfig, *, text: str | None = None, payload: Mapping[str, object] | None = None, table: str | None = None) -> str:  # noqa: E501
        """
        Serialise a result in the requested format.

        Commands with a plain-text rendering default to it; every other command defaults to
        JSON.
        """
        output_format: OutputFormat = config.output_format or (
            OutputFormat.TEXT if text is not None else OutputFormat.JSON
        )

        rendered: str | None = {
            OutputFormat.TEXT: text,
            OutputFormat.JSON: (
                json.dumps(payload, indent=2, ensure_ascii=False)
                if payload is not None
                else None
            ),
            OutputFormat.CSV: table,
        }[output_format]

        if rendered is None:
            UNSUPPORTED_FORMAT_MESSAGE: Final[str] = (
                f"The {config.command!r} command has no {output_format.value} output."
            )
            raise InvalidRunConfigError(UNSUPPORTED_FORMAT_MESSAGE)

        return rendered

    def send_error(self, config: RunConfig, error_code: str | None = None, message: str | None = None, logging_message: str | BaseException | None = None) -> None:  # noqa: E501
        """
        Construct & format an error message from the given details.

        The constructed error message is then written to the error stream.
        """
        construct_error_message: str = "There was an error"

        if error_code:
            construct_error_message = f"[{error_code}] {construct_error_message}"

        if config.command in self.ERROR_ACTIVITIES:
            construct_error_message += (
                f" when trying to {self.ERROR_ACTIVITIES[config.command]}"
            )

        construct_error_message += ":" if message else "."

        if message:
            construct_error_message += f"\n{message.strip()}"

        self.error_stream.write(f"{construct_error_message}\n")

        if logging_message:
            logger.error(
                " ".join(
                    message_part
                    for message_part
                    in (
                        error_code if error_code else "",
                        f"({config.command})",
                        str(logging_message),
                    )
                    if message_part
                ).rstrip(": ;"),
                exc_info=(
                    logging_message
                    if config.show_traceback and isinstance(logging_message, BaseException)
                    else None
                ),
            )
