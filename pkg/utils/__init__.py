"""Utility classes & functions provided for use across the whole of the project."""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "BaseCommand",
    "CommandChecks",
    "FileOutputSender",
    "OutputFormat",
    "OutputSenderComponent",
    "RunConfig",
    "StreamOutputSender",
    "SuppressTraceback",
    "ToolkitParser",
    "capture_domain_error",
    "format_complex",
    "format_real",
    "make_output_sender",
    "wants_traceback",
)


from utils.base_command import BaseCommand
from utils.command_checks import CommandChecks
from utils.error_capture_decorators import capture_domain_error
from utils.formatting import format_complex, format_real
from utils.output_senders import (
    FileOutputSender,
    OutputSenderComponent,
    StreamOutputSender,
    make_output_sender,
)
from utils.run_config import OutputFormat, RunConfig
from utils.suppress_traceback import SuppressTraceback, wants_traceback
from utils.toolkit_parser import ToolkitParser
