"""Operand checks applied by the argument parser, before any command is dispatched."""

from collections.abc import Sequence

__all__: Sequence[str] = ("CommandChecks",)

import argparse
from collections.abc import Callable
from typing import Final


class CommandChecks:
    """
    Argument-type callables that validate raw command-line operands.

    A failing check is reported by the parser as a usage error, so the command never runs.
    """

    @staticmethod
    def _integer(raw_value: str) -> int:
        e: ValueError
        try:
            return int(raw_value, 10)
        except ValueError as e:
            NOT_AN_INTEGER_MESSAGE: Final[str] = f"{raw_value!r} is not a decimal integer."
            raise argparse.ArgumentTypeError(NOT_AN_INTEGER_MESSAGE) from e

    @classmethod
    def natural(cls, raw_value: str) -> int:
        """Parse a non-negative integer operand."""
        value: int = cls._integer(raw_value)

        if value < 0:
            NEGATIVE_OPERAND_MESSAGE: Final[str] = f"{value} is not a natural number."
            raise argparse.ArgumentTypeError(NEGATIVE_OPERAND_MESSAGE)

        return value

    @classmethod
    def positive(cls, raw_value: str) -> int:
        """Parse an integer operand of at least 1."""
        value: int = cls._integer(raw_value)

        if value < 1:
            NON_POSITIVE_OPERAND_MESSAGE: Final[str] = f"{value} is not a positive integer."
            raise argparse.ArgumentTypeError(NON_POSITIVE_OPERAND_MESSAGE)

        return value

    @classmethod
    def odd_modulus(cls, raw_value: str) -> int:
        """Parse an odd modulus of at least 3."""
        value: int = cls._integer(raw_value)

        if value < 3 or value % 2 == 0:
            INVALID_MODULUS_MESSAGE: Final[str] = f"{value} is not an odd integer of at least 3."
            raise argparse.ArgumentTypeError(INVALID_MODULUS_MESSAGE)

        return value

    @classmethod
    def seed(cls, raw_value: str) -> int:
        """Parse an unsigned 64-bit seed."""
        value: int = cls._integer(raw_value)

        if not 0 <= value < 2**64:
            INVALID_SEED_MESSAGE: Final[str] = f"{value} is not an unsigned 64-bit seed."
            raise argparse.ArgumentTypeError(INVALID_SEED_MESSAGE)

        return value

    @classmethod
    def bounded(cls, minimum: int, maximum: int) -> Callable[[str], int]:
        """Return a check parsing an integer operand between & including the given bounds."""
        def check(raw_value: str) -> int:
            value: int = cls._integer(raw_value)

            if not minimum <= value <= maximum:
                OUT_OF_RANGE_MESSAGE: Final[str] = (
                    f"{value} is not between & including {minimum} & {maximum}."
                )
                raise argparse.ArgumentTypeError(OUT_OF_RANGE_MESSAGE)

            return value

        return check
