"""Test suite for utils package."""

from collections.abc import Sequence

__all__: Sequence[str] = ()

import argparse
import io
import json
import sys
from collections.abc import Callable
from typing import TYPE_CHECKING, Final

import pytest

import commands
from exceptions import InvalidRunConfigError, NotANaturalNumberError
from utils import (
    BaseCommand,
    CommandChecks,
    FileOutputSender,
    OutputFormat,
    RunConfig,
    StreamOutputSender,
    SuppressTraceback,
    ToolkitParser,
    capture_domain_error,
    format_complex,
    format_real,
    make_output_sender,
    wants_traceback,
)

if TYPE_CHECKING:
    from pathlib import Path


class _FailingCommand(BaseCommand):
    NAME = "gcd"
    HELP = "Always fails."

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("u", type=CommandChecks.natural)

    @capture_domain_error
    def run(self, config: RunConfig) -> str | None:
        NEGATIVE_MESSAGE: Final[str] = f"{config.u} cannot be used."
        raise NotANaturalNumberError(NEGATIVE_MESSAGE)


class TestCommandChecks:
    """Test case to unit-test the argument-type checks of raw operands."""

    @staticmethod
    def test_valid_operands() -> None:
        """Test that operands inside their ranges are parsed as integers."""
        assert CommandChecks.natural("0") == 0
        assert CommandChecks.positive("12") == 12
        assert CommandChecks.odd_modulus("45") == 45
        assert CommandChecks.seed(str(2**64 - 1)) == 2**64 - 1
        assert CommandChecks.bounded(2, 24)("24") == 24

    @pytest.mark.parametrize(
        ("check", "raw_value"),
        (
            (CommandChecks.natural, "-1"),
            (CommandChecks.natural, "1.5"),
            (CommandChecks.positive, "0"),
            (CommandChecks.odd_modulus, "1"),
            (CommandChecks.odd_modulus, "44"),
            (CommandChecks.seed, str(2**64)),
            (CommandChecks.bounded(2, 24), "25"),
            (CommandChecks.natural, "0x10"),
        ),
    )
    def test_invalid_operands(self, check: Callable[[str], int], raw_value: str) -> None:
        """Test that every out-of-range or malformed operand is a usage error."""
        with pytest.raises(argparse.ArgumentTypeError):
            check(raw_value)


class TestRunConfig:
    """Test case to unit-test the validated configuration of one run."""

    @staticmethod
    def test_from_namespace_keeps_defaults() -> None:
        """Test that options missing from the namespace keep their defaults."""
        config: RunConfig = RunConfig.from_namespace(
            argparse.Namespace(command="jacobi", m=2, modulus=15, seed=None, plot=None)
        )

        assert config == RunConfig(command="jacobi", m=2, modulus=15)
        assert config.seed == 0

    @staticmethod
    def test_require_operand() -> None:
        """Test that a missing operand is reported as a run configuration error."""
        config: RunConfig = RunConfig(command="gcd", u=4)

        assert config.require_operand("u") == 4
        with pytest.raises(InvalidRunConfigError, match="'v'"):
            config.require_operand("v")

    @pytest.mark.parametrize("seed", (-1, 2**64))
    def test_seed_range(self, seed: int) -> None:
        """Test that seeds outside the unsigned 64-bit range are rejected."""
        with pytest.raises(InvalidRunConfigError):
            RunConfig(command="omega", seed=seed)


class TestOutputSenders:
    """Test case to unit-test the components sending a command's output."""

    @staticmethod
    def test_stream_sender_adds_newline() -> None:
        """Test that the output always ends with exactly one trailing newline."""
        stream: io.StringIO = io.StringIO()

        StreamOutputSender(stream).send("12")

        assert stream.getvalue() == "12\n"

    @staticmethod
    def test_sends_only_once() -> None:
        """Test that a sender refuses to send twice."""
        sender: StreamOutputSender = StreamOutputSender(io.StringIO())
        sender.send("first\n")

        with pytest.raises(RuntimeError, match="already been sent"):
            sender.send("second\n")

    @staticmethod
    def test_file_sender_creates_parents(tmp_path: "Path") -> None:
        """Test that the file sender creates missing directories."""
        path: Path = tmp_path / "nested" / "result.csv"

        FileOutputSender(path).send("a,b\n")

        assert path.read_text(encoding="utf-8") == "a,b\n"

    @staticmethod
    def test_make_output_sender(tmp_path: "Path") -> None:
        """Test that a path selects the file sender & no path selects the stream sender."""
        assert isinstance(make_output_sender(None), StreamOutputSender)
        assert isinstance(make_output_sender(tmp_path / "out.txt"), FileOutputSender)


class TestToolkitParser:
    """Test case to unit-test registering & dispatching commands."""

    @staticmethod
    def test_every_command_registered() -> None:
        """Test that setup registers all nine commands."""
        parser: ToolkitParser = ToolkitParser()
        commands.setup(parser)

        assert set(parser.command_names) == {
            "decompose",
            "omega",
            "gauss",
            "jacobi",
            "gcd",
            "circuit",
            "bound",
            "bench-costs",
            "sweep",
        }

    @staticmethod
    def test_duplicate_command_rejected() -> None:
        """Test that two commands cannot share a name."""
        parser: ToolkitParser = ToolkitParser()
        parser.add_command(_FailingCommand())

        with pytest.raises(ValueError, match="already registered"):
            parser.add_command(_FailingCommand())

    @staticmethod
    def test_captured_domain_error() -> None:
        """Test that a domain error is written to the error stream with its code & exits 1."""
        stream: io.StringIO = io.StringIO()
        error_stream: io.StringIO = io.StringIO()

        parser: ToolkitParser = ToolkitParser()
        parser.add_command(_FailingCommand(stream, error_stream))

        assert parser.dispatch(["gcd", "3"]) == 1
        assert not stream.getvalue()
        assert error_stream.getvalue() == (
            "[E2001] There was an error when trying to compute the greatest common divisor:\n"
            "3 cannot be used.\n"
        )

    @staticmethod
    def test_render_defaults() -> None:
        """Test that text is preferred when available & JSON is used otherwise."""
        config: RunConfig = RunConfig(command="gcd")

        assert BaseCommand.render(config, text="6", payload={"gcd": 6}) == "6"
        assert json.loads(BaseCommand.render(config, payload={"gcd": 6})) == {"gcd": 6}
        assert BaseCommand.render(
            RunConfig(command="gcd", output_format=OutputFormat.CSV),
            text="6",
            table="gcd\n6\n",
        ) == "gcd\n6\n"


class TestFormatting:
    """Test case to unit-test the fixed-precision number formatting."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        ((0.0, "0.000000"), (-0.0, "0.000000"), (-1e-12, "0.000000"), (2.5, "2.500000"), (-3.0, "-3.000000")),  # noqa: E501
    )
    def test_format_real(self, value: float, expected: str) -> None:
        """Test that reals are fixed to six places & never print a negative zero."""
        assert format_real(value) == expected

    @staticmethod
    def test_format_complex() -> None:
        """Test that complex numbers print their parts separated by one space."""
        assert format_complex(complex(-1e-14, 3.872983346207417)) == "0.000000 3.872983"


class TestSuppressTraceback:
    """Test case to unit-test hiding the traceback of escaping errors."""

    @staticmethod
    def test_wants_traceback() -> None:
        """Test that only the `--traceback` flag asks for full tracebacks."""
        assert wants_traceback(["decompose", "45", "--traceback"])
        assert not wants_traceback(["decompose", "45"])

    @staticmethod
    def test_limit_restored() -> None:
        """Test that the traceback limit is zero inside the context & restored after it."""
        PREVIOUS_LIMIT: Final[int | None] = getattr(sys, "tracebacklimit", None)

        with SuppressTraceback():
            assert sys.tracebacklimit == 0

        assert getattr(sys, "tracebacklimit", None) == PREVIOUS_LIMIT

    @staticmethod
    def test_not_suppressed() -> None:
        """Test that the limit is untouched when suppression is turned off."""
        PREVIOUS_LIMIT: Final[int | None] = getattr(sys, "tracebacklimit", None)

        with SuppressTraceback(suppress=False):
            assert getattr(sys, "tracebacklimit", None) == PREVIOUS_LIMIT
