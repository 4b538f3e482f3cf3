"""
Numerical evaluation of Gauss sums G(a, χ_N) = Σ_m χ_N(m)·e^(2πi·a·m/N).

Single sums & full tables are evaluated by direct summation over reduced phase indices;
full tables can alternatively be produced by one inverse FFT of the character table.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "GaussSumMethod",
    "GaussSumTable",
    "character_table",
    "gauss_sum",
    "gauss_table",
)

import csv
import functools
import io
import logging
from dataclasses import dataclass
from enum import StrEnum
from logging import Logger
from typing import TYPE_CHECKING, Final

import numpy as np

from config import settings
from exceptions import ExhaustiveLimitExceededError
from numtheory import jacobi_binary, require_natural, require_odd_modulus
from utils.formatting import format_real

if TYPE_CHECKING:
    import numpy.typing as npt

logger: Logger = logging.getLogger("gauss-squarefree")

_DIRECT_CHUNK_ELEMENTS: Final[int] = 1 << 22


class GaussSumMethod(StrEnum):
    """How a full table of Gauss sums is evaluated."""

    DIRECT = "direct"
    FFT = "fft"


@functools.lru_cache(maxsize=64)
def character_table(modulus: int) -> "npt.NDArray[np.int8]":
    """Return the read-only array of χ_N(m) for every m in [0, N)."""
    require_odd_modulus(modulus)

    table: npt.NDArray[np.int8] = np.fromiter(
        (jacobi_binary(m, modulus) for m in range(modulus)),
        dtype=np.int8,
        count=modulus,
    )
    table.flags.writeable = False

    return table


@functools.lru_cache(maxsize=64)
def _roots_of_unity(modulus: int) -> "npt.NDArray[np.complex128]":
    roots: npt.NDArray[np.complex128] = np.exp(
        2j * np.pi * np.arange(modulus, dtype=np.float64) / modulus
    )
    roots.flags.writeable = False
    return roots


def gauss_sum(a: int, modulus: int) -> complex:
    """Return G(a, χ_N) by direct summation, with `a` taken modulo N."""
    require_natural(a)
    require_odd_modulus(modulus)

    phase_indices: npt.NDArray[np.int64] = (
        (a % modulus) * np.arange(modulus, dtype=np.int64)
    ) % modulus

    return complex(
        np.dot(character_table(modulus), _roots_of_unity(modulus)[phase_indices])
    )


@dataclass(frozen=True, slots=True, eq=False)
class GaussSumTable:
    """Every Gauss sum G(a, χ_N) for a in [0, N)."""

    modulus: int
    values: "npt.NDArray[np.complex128]"

    def __getitem__(self, a: int) -> complex:
        """Return G(a, χ_N), with `a` taken modulo N."""
        return complex(self.values[a % self.modulus])

    def __len__(self) -> int:
        """Return the number of tabulated sums, which is the modulus."""
        return self.modulus

    @property
    def magnitudes(self) -> "npt.NDArray[np.float64]":
        """The absolute value of every tabulated sum."""
        return np.abs(self.values)

    def gcds(self) -> "npt.NDArray[np.int64]":
        """Return gcd(a, N) for every tabulated index a."""
        return np.gcd(np.arange(self.modulus, dtype=np.int64), self.modulus)

    def parseval_defect(self) -> float:
        """Return |Σ_a |G(a, χ)|² - N·φ(N)|, where φ(N) is the number of nonzero χ values."""
        nonzero_characters: int = int(np.count_nonzero(character_table(self.modulus)))

        return abs(
            float(np.sum(self.magnitudes ** 2)) - self.modulus * nonzero_characters
        )

    def to_csv(self) -> str:
        """Serialise the table with the columns a, re, im & gcd(a, N)."""
        output: io.StringIO = io.StringIO()
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(("a", "re", "im", "gcd"))

        a: int
        gcd: int
        for a, gcd in enumerate(self.gcds().tolist()):
            writer.writerow(
                (
                    a,
                    format_real(float(self.values[a].real)),
                    format_real(float(self.values[a].imag)),
                    gcd,
                )
            )

        return output.getvalue()


def _direct_table(modulus: int) -> "npt.NDArray[np.complex128]":
    characters: npt.NDArray[np.complex128] = character_table(modulus).astype(np.complex128)
    roots: npt.NDArray[np.complex128] = _roots_of_unity(modulus)
    indices: npt.NDArray[np.int64] = np.arange(modulus, dtype=np.int64)
    values: npt.NDArray[np.complex128] = np.empty(modulus, dtype=np.complex128)

    chunk_size: int = max(1, _DIRECT_CHUNK_ELEMENTS // modulus)

    start: int
    for start in range(0, modulus, chunk_size):
        block: npt.NDArray[np.int64] = indices[start:start + chunk_size]
        values[start:start + chunk_size] = (
            roots[np.outer(block, indices) % modulus] @ characters
        )

    return values


def _fft_table(modulus: int) -> "npt.NDArray[np.complex128]":
    return modulus * np.fft.ifft(character_table(modulus).astype(np.complex128))


def gauss_table(modulus: int, method: GaussSumMethod = GaussSumMethod.DIRECT) -> GaussSumTable:  # noqa: E501
    """
    Return every Gauss sum of the odd modulus N.

    Full tables are limited to moduli no larger than the `EXHAUSTIVE_LIMIT` setting.
    """
    require_odd_modulus(modulus)

    if modulus > settings["EXHAUSTIVE_LIMIT"]:
        TABLE_TOO_LARGE_MESSAGE: Final[str] = (
            f"Modulus {modulus} exceeds the exhaustive limit "
            f"of {settings['EXHAUSTIVE_LIMIT']} for full Gauss-sum tables."
        )
        raise ExhaustiveLimitExceededError(TABLE_TOO_LARGE_MESSAGE)

    return _evaluate_table(modulus, GaussSumMethod(method))


@functools.lru_cache(maxsize=16)
def _evaluate_table(modulus: int, method: GaussSumMethod) -> GaussSumTable:
    logger.debug("Evaluating Gauss-sum table of %d using the %s method", modulus, method)

    values: npt.NDArray[np.complex128] = (
        _fft_table(modulus) if method == GaussSumMethod.FFT else _direct_table(modulus)
    )
    values.flags.writeable = False

    table: GaussSumTable = GaussSumTable(modulus=modulus, values=values)

    if table.parseval_defect() > modulus * 1e-9:
        logger.warning(
            "Gauss-sum table of %d misses Parseval's identity by %g",
            modulus,
            table.parseval_defect(),
        )

    return table

