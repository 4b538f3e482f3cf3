"""The square-free decomposition value type & the classical reduction of even arguments."""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "SquareFreeDecomposition",
    "strip_even",
    "lift_even",
    "is_perfect_square",
)

import math
from dataclasses import dataclass
from typing import Final

from exceptions import NotANaturalNumberError


@dataclass(frozen=True, slots=True)
class SquareFreeDecomposition:
    """
    The unique pair (r, s) with N = r·s² & r square-free.

    `r` is the square-free part of N & `s²` is its square part.
    """

    r: int
    s: int

    def __post_init__(self) -> None:
        """Reject decompositions with non-positive parts."""
        if self.r < 1 or self.s < 1:
            NON_POSITIVE_PART_MESSAGE: Final[str] = (
                f"Decomposition parts must be positive, got r={self.r} & s={self.s}."
            )
            raise NotANaturalNumberError(NON_POSITIVE_PART_MESSAGE)

    @property
    def square_part(self) -> int:
        """The square part s² of the decomposed number."""
        return self.s * self.s

    @property
    def value(self) -> int:
        """The decomposed number r·s²."""
        return self.r * self.square_part

    def to_dict(self) -> dict[str, int]:
        """Serialise this decomposition into a JSON-compatible mapping."""
        return {"n": self.value, "r": self.r, "s": self.s}


def strip_even(value: int) -> tuple[int, int]:
    """Split `value` into its odd core & the exponent of 2 dividing it."""
    if value < 1:
        NOT_POSITIVE_MESSAGE: Final[str] = (
            f"Cannot strip the even part of {value}: it is not positive."
        )
        raise NotANaturalNumberError(NOT_POSITIVE_MESSAGE, value=value)

    two_exponent: int = (value & -value).bit_length() - 1

    return value >> two_exponent, two_exponent


def lift_even(odd_core_decomposition: SquareFreeDecomposition, two_exponent: int) -> SquareFreeDecomposition:  # noqa: E501
    """
    Reattach a power of two to the decomposition of an odd core.

    An even exponent contributes 2^(e/2) to s; an odd exponent contributes one factor 2 to r
    & 2^((e-1)/2) to s.
    """
    if two_exponent < 0:
        NEGATIVE_EXPONENT_MESSAGE: Final[str] = (
            f"The exponent of two must be non-negative, got {two_exponent}."
        )
        raise NotANaturalNumberError(NEGATIVE_EXPONENT_MESSAGE, value=two_exponent)

    return SquareFreeDecomposition(
        r=odd_core_decomposition.r * (2 if two_exponent % 2 else 1),
        s=odd_core_decomposition.s << (two_exponent // 2),
    )


def is_perfect_square(value: int) -> bool:
    """Return whether `value` is the square of a natural number."""
    return value >= 0 and math.isqrt(value) ** 2 == value
