"""
Context manager that hides tracebacks of unexpected errors unless `--traceback` was given.

The previous traceback limit is restored when the context manager exits normally.
"""

from collections.abc import Sequence

__all__: Sequence[str] = ("SuppressTraceback", "wants_traceback")

import sys
from types import TracebackType


def wants_traceback(argv: Sequence[str]) -> bool:
    """Return whether the raw command line asked for full tracebacks."""
    return "--traceback" in argv


class SuppressTraceback:
    """
    Context manager to suppress the traceback output when an exception escapes a command.

    An error raised inside the context is still reported by the interpreter, as a single
    line holding its type & message.
    """

    def __init__(self, *, suppress: bool = True) -> None:
        """
        Initialise a new SuppressTraceback context manager instance.

        The current value of `sys.tracebacklimit` is stored, so that it can be restored.
        """
        self.suppress: bool = suppress
        # noinspection SpellCheckingInspection
        self.previous_traceback_limit: int | None = getattr(sys, "tracebacklimit", None)

    def __enter__(self) -> None:
        """Enter the context manager, suppressing the traceback output if requested."""
        if self.suppress:
            # noinspection SpellCheckingInspection
            sys.tracebacklimit = 0

    def __exit__(self, exc_type: type[BaseException] | None, exc_val: BaseException | None, exc_tb: TracebackType | None) -> None:  # noqa: E501
        """Exit the context manager, reverting the limit of traceback output."""
        if not self.suppress or exc_val is not None:
            return

        # noinspection SpellCheckingInspection
        if self.previous_traceback_limit is None:
            if hasattr(sys, "tracebacklimit"):
                del sys.tracebacklimit
        else:
            # noinspection SpellCheckingInspection
            sys.tracebacklimit = self.previous_traceback_limit
