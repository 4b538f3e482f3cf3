"""Class definitions of components that send a command's rendered output to an endpoint."""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "OutputSenderComponent",
    "StreamOutputSender",
    "FileOutputSender",
    "make_output_sender",
)

import abc
import logging
import sys
from logging import Logger
from typing import TYPE_CHECKING, Final, TextIO, final

if TYPE_CHECKING:
    from pathlib import Path

logger: Logger = logging.getLogger("gauss-squarefree")


class OutputSenderComponent(abc.ABC):
    """
    Abstract protocol definition of a sending component.

    Defines the way to send rendered command output to the defined endpoint, exactly once.
    """

    def __init__(self) -> None:
        """Initialise a new OutputSenderComponent for later use."""
        self.sent: bool = False

    @abc.abstractmethod
    def _send(self, content: str) -> None:
        """
        Subclass implementation of `send()` method.

        Implementations should write the provided content to the defined endpoint.
        """

    @final
    def send(self, content: str) -> None:
        """Send the provided content to the defined endpoint."""
        if self.sent:
            ALREADY_SENT_MESSAGE: Final[str] = (
                f"Output has already been sent using this {type(self).__name__}."
            )
            raise RuntimeError(ALREADY_SENT_MESSAGE)

        self._send(content if content.endswith("\n") else f"{content}\n")
        self.sent = True


class StreamOutputSender(OutputSenderComponent):
    """Concrete definition of a sending component that writes to an open text stream."""

    def __init__(self, stream: TextIO | None = None) -> None:
        """Initialise a new StreamOutputSender, writing to stdout unless told otherwise."""
        self.stream: TextIO = sys.stdout if stream is None else stream

        super().__init__()

    def _send(self, content: str) -> None:
        self.stream.write(content)
        self.stream.flush()


class FileOutputSender(OutputSenderComponent):
    """Concrete definition of a sending component that writes a UTF-8 file, replacing it."""

    def __init__(self, path: "Path") -> None:
        """Initialise a new FileOutputSender with the given path for later use."""
        self.path: Path = path

        super().__init__()

    def _send(self, content: str) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text(content, encoding="utf-8", newline="\n")

        logger.debug("Wrote %d characters of output to %s", len(content), self.path)


def make_output_sender(output: "Path | None", stream: TextIO | None = None) -> OutputSenderComponent:  # noqa: E501
    """Return the sender for the `--out` path, or for the given stream when there is none."""
    if output is None:
        return StreamOutputSender(stream)

    return FileOutputSender(output)
