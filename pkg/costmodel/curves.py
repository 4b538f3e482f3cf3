"""
Closed-form operation counts of three ways of learning the square-free decomposition of N.

Every curve is parameterised by the number of decimal digits of N, through L = digits·ln 10.
All hidden constants are 1, so only the shape & ordering of the curves are meaningful.
Costs are reported as log₁₀ of the abstract operation count, so the ratio of two counts is
the difference of their costs: cost_ours(200) - cost_ours(100) is log₁₀ of how many times
dearer 200 digits are than 100. `cost_ratio` turns such a difference back into a ratio.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "MINIMUM_DIGITS",
    "CostPoint",
    "CurveLayout",
    "cost_nfs",
    "cost_ours",
    "cost_points",
    "cost_ratio",
    "cost_shor",
    "crossover_digits",
    "emit_curves",
    "speedup_over_shor",
)

import csv
import io
import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum
from logging import Logger
from typing import Final

from config import settings
from exceptions import InvalidRunConfigError
from utils.formatting import format_real

logger: Logger = logging.getLogger("gauss-squarefree")

MINIMUM_DIGITS: Final[int] = 2

_CSV_HEADER: Final[Sequence[str]] = ("digits", "ours_expected", "ours_worst", "shor", "nfs")


class CurveLayout(StrEnum):
    """Column layout of emitted cost curves."""

    CSV = "csv"
    GNUPLOT = "gnuplot"


def _log_size(digits: int) -> float:
    if digits < MINIMUM_DIGITS:
        TOO_FEW_DIGITS_MESSAGE: Final[str] = (
            f"Cost curves start at {MINIMUM_DIGITS} decimal digits, not {digits}."
        )
        raise InvalidRunConfigError(TOO_FEW_DIGITS_MESSAGE)

    return digits * math.log(10)


def cost_ours(digits: int, *, worst: bool = False) -> float:
    """
    Return log₁₀ of the cost of the Gauss-sum decomposition on a number of the given digits.

    The expected cost is L²·(ln L)²; `worst=True` gives the worst-case L³.
    """
    size: float = _log_size(digits)

    if worst:
        return 3 * math.log10(size)

    return 2 * math.log10(size) + 2 * math.log10(math.log(size))


def cost_shor(digits: int) -> float:
    """Return log₁₀ of L³·ln L·ln ln L, the cost of going through Shor's factoring."""
    size: float = _log_size(digits)

    return (
        3 * math.log10(size)
        + math.log10(math.log(size))
        + math.log10(math.log(math.log(size)))
    )


def cost_nfs(digits: int, constant: float | None = None) -> float:
    """Return log₁₀ of exp(c·L^(1/3)·(ln L)^(2/3)), the number field sieve's running time."""
    size: float = _log_size(digits)
    nfs_constant: float = settings["NFS_CONSTANT"] if constant is None else constant

    if nfs_constant <= 0:
        NON_POSITIVE_CONSTANT_MESSAGE: Final[str] = (
            f"The number field sieve constant must be positive, not {nfs_constant}."
        )
        raise InvalidRunConfigError(NON_POSITIVE_CONSTANT_MESSAGE)

    # NOTE: Computed in log space, so that the curve never overflows a float
    return nfs_constant * size ** (1 / 3) * math.log(size) ** (2 / 3) / math.log(10)


def cost_ratio(cost: float, baseline_cost: float) -> float:
    """Return how many times more operations `cost` stands for than `baseline_cost`."""
    return 10 ** (cost - baseline_cost)


def speedup_over_shor(digits: int) -> float:
    """Return how many orders of magnitude the expected curve lies below Shor's curve."""
    return cost_shor(digits) - cost_ours(digits)


def crossover_digits(constant: float | None = None, max_digits: int = 1000) -> int | None:
    """
    Return the digit count from which the sieve stays costlier than Shor up to `max_digits`.

    `None` is returned when the sieve is still cheaper at `max_digits`.
    """
    if max_digits < MINIMUM_DIGITS:
        TOO_FEW_DIGITS_MESSAGE: Final[str] = (
            f"The crossover search needs at least {MINIMUM_DIGITS} digits, not {max_digits}."
        )
        raise InvalidRunConfigError(TOO_FEW_DIGITS_MESSAGE)

    crossover: int | None = None

    digits: int
    for digits in range(max_digits, MINIMUM_DIGITS - 1, -1):
        if cost_nfs(digits, constant) <= cost_shor(digits):
            break

        crossover = digits

    logger.debug("Sieve overtakes Shor at %s digits (c = %s)", crossover, constant)

    return crossover


@dataclass(frozen=True, slots=True)
class CostPoint:
    """The log₁₀ costs of every curve at one digit count."""

    digits: int
    ours_expected: float
    ours_worst: float
    shor: float
    nfs: float

    @classmethod
    def at(cls, digits: int, nfs_constant: float | None = None) -> "CostPoint":
        return cls(
            digits=digits,
            ours_expected=cost_ours(digits),
            ours_worst=cost_ours(digits, worst=True),
            shor=cost_shor(digits),
            nfs=cost_nfs(digits, nfs_constant),
        )

    def to_dict(self) -> dict[str, object]:
        return {
            "digits": self.digits,
            "ours_expected": self.ours_expected,
            "ours_worst": self.ours_worst,
            "shor": self.shor,
            "nfs": self.nfs,
        }

    def as_row(self) -> tuple[str, ...]:
        return (
            str(self.digits),
            format_real(self.ours_expected),
            format_real(self.ours_worst),
            format_real(self.shor),
            format_real(self.nfs),
        )


def cost_points(start: int, stop: int, step: int = 1, nfs_constant: float | None = None) -> tuple[CostPoint, ...]:  # noqa: E501
    """Return the cost points of every digit count from `start` to `stop` inclusive."""
    if start < MINIMUM_DIGITS or stop < start or step < 1:
        INVALID_RANGE_MESSAGE: Final[str] = (
            f"Cannot emit cost curves over digits {start}…{stop} in steps of {step}."
        )
        raise InvalidRunConfigError(INVALID_RANGE_MESSAGE)

    return tuple(
        CostPoint.at(digits, nfs_constant) for digits in range(start, stop + 1, step)
    )


def emit_curves(points: Iterable[CostPoint], layout: CurveLayout = CurveLayout.CSV) -> str:
    """
    Serialise cost points with one row per digit count.

    The gnuplot layout separates columns by spaces & comments out the header line.
    """
    output: io.StringIO = io.StringIO()

    if layout == CurveLayout.GNUPLOT:
        output.write("# " + " ".join(_CSV_HEADER) + "\n")
        output.writelines(" ".join(point.as_row()) + "\n" for point in points)
        return output.getvalue()

    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(_CSV_HEADER)
    writer.writerows(point.as_row() for point in points)

    return output.getvalue()
