"""Fixed-precision rendering of numeric results, so that output is byte-reproducible."""

from collections.abc import Sequence

__all__: Sequence[str] = ("DECIMAL_PLACES", "format_real", "format_complex")

from typing import Final

DECIMAL_PLACES: Final[int] = 6


def format_real(value: float, decimal_places: int = DECIMAL_PLACES) -> str:
    """Format a real number in fixed decimal notation, never emitting a negative zero."""
    formatted: str = f"{value:.{decimal_places}f}"

    if formatted.startswith("-") and not formatted.strip("-0."):
        return formatted[1:]

    return formatted


def format_complex(value: complex, decimal_places: int = DECIMAL_PLACES) -> str:
    """Format a complex number as its real & imaginary parts separated by one space."""
    return (
        f"{format_real(value.real, decimal_places)} "
        f"{format_real(value.imag, decimal_places)}"
    )
