"""
The main entrypoint into the running of the toolkit.

It loads the settings values from the .env file/the environment variables,
then registers every command on the argument parser & finally dispatches the given
command line, exiting with the command's exit code.
"""

from collections.abc import Sequence

__all__: Sequence[str] = ("main",)

import sys
from typing import TextIO

import commands
import config
from exceptions import ImproperlyConfiguredError
from utils import SuppressTraceback, ToolkitParser, wants_traceback


def main(argv: Sequence[str] | None = None, stream: TextIO | None = None, error_stream: TextIO | None = None) -> int:  # noqa: E501
    """Run one command line & return its exit code: 0 on success, 1 or 2 on failure."""
    arguments: Sequence[str] = sys.argv[1:] if argv is None else argv

    with SuppressTraceback(suppress=not wants_traceback(arguments)):
        e: ImproperlyConfiguredError
        try:
            config.run_setup()
        except ImproperlyConfiguredError as e:
            (error_stream or sys.stderr).write(f"{e}\n")
            return 1

        parser: ToolkitParser = ToolkitParser()
        commands.setup(parser, stream, error_stream)

        return parser.dispatch(arguments)


if __name__ == "__main__":
    raise SystemExit(main())
