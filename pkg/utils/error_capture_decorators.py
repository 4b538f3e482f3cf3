"""
Common decorator utilities to capture & report domain errors.

A captured error is reported on the error stream & turns into exit code 1.
"""

from collections.abc import Sequence

__all__: Sequence[str] = ("ErrorCaptureDecorators", "capture_domain_error")

import functools
from collections.abc import Callable
from typing import TYPE_CHECKING, Final, TypeVar

from exceptions import BaseErrorWithErrorCode, BaseSquareFreeError
from utils.base_command import BaseCommand

CommandT = TypeVar("CommandT", bound=BaseCommand)

if TYPE_CHECKING:
    from typing import TypeAlias

    from utils.run_config import RunConfig

    CommandRunFunc: TypeAlias = Callable[[CommandT, RunConfig], str | None]


class ErrorCaptureDecorators:
    """Common decorator utilities to capture & report domain errors."""

    @staticmethod
    def capture_error_and_report(func: "CommandRunFunc[CommandT]", error_type: type[BaseException]) -> "CommandRunFunc[CommandT]":  # noqa: E501
        """
        Decorator to report an error message to the user when the given exception type is raised.

        The raised exception is then suppressed.
        """  # noqa: D401
        @functools.wraps(func)
        def wrapper(self: CommandT, config: "RunConfig") -> str | None:
            if not isinstance(self, BaseCommand):
                INVALID_METHOD_TYPE_MESSAGE: Final[str] = (  # type: ignore[unreachable]
                    f"Parameter {self.__name__!r} of any 'capture_error' decorator "
                    f"must be an instance of {BaseCommand.__name__!r}/one of its subclasses."
                )
                raise TypeError(INVALID_METHOD_TYPE_MESSAGE)

            try:
                return func(self, config)
            except error_type as error:
                self.send_error(
                    config,
                    error_code=(
                        error.ERROR_CODE if isinstance(error, BaseErrorWithErrorCode) else None
                    ),
                    message=str(error),
                    logging_message=error,
                )
                return None

        return wrapper


def capture_domain_error(func: "CommandRunFunc[CommandT]") -> "CommandRunFunc[CommandT]":
    """
    Decorator to report an error message to the user when any domain error is raised.

    The raised exception is then suppressed.
    """  # noqa: D401
    return ErrorCaptureDecorators.capture_error_and_report(
        func,
        error_type=BaseSquareFreeError,
    )
