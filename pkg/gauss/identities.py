"""
Checks of the Gauss-sum identities that the square-free test depends on.

Every check returns the largest deviation it found, so that callers can decide on their own
tolerance; the boolean helpers apply the default tolerance ladder (1e-9 for single sums,
1e-6 for identities amplified by φ(N)/φ(x)).
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "SINGLE_SUM_TOLERANCE",
    "RATIO_IDENTITY_TOLERANCE",
    "DichotomyReport",
    "ReductionReport",
    "epsilon",
    "gauss_closed_form",
    "gauss_reduction_check",
    "verify_dichotomy",
    "verify_closed_form",
    "verify_reduction",
    "symmetry_defects",
    "square_divisors",
)

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Final

import numpy as np

from exceptions import NotASquareDivisorError, NotSquareFreeModulusError
from gauss.sums import GaussSumMethod, GaussSumTable, gauss_sum, gauss_table
from numtheory import (
    euler_phi,
    is_perfect_square,
    is_square_free,
    jacobi_binary,
    require_natural,
    require_odd_modulus,
)

if TYPE_CHECKING:
    import numpy.typing as npt

SINGLE_SUM_TOLERANCE: Final[float] = 1e-9
RATIO_IDENTITY_TOLERANCE: Final[float] = 1e-6


def epsilon(modulus: int) -> complex:
    """Return ε_N: 1 when N ≡ 1 (mod 4) & i when N ≡ 3 (mod 4)."""
    require_odd_modulus(modulus)

    return 1 + 0j if modulus % 4 == 1 else 1j


def gauss_closed_form(a: int, modulus: int) -> complex:
    """
    Return ε_N·χ_N(a)·√N, the value of G(a, χ_N) for a square-free modulus.

    The value is 0 whenever gcd(a, N) > 1, which agrees with the direct sum.
    """
    require_natural(a)
    require_odd_modulus(modulus)

    if not is_square_free(modulus):
        NOT_SQUARE_FREE_MESSAGE: Final[str] = (
            f"The closed form only holds for square-free moduli, but {modulus} is not."
        )
        raise NotSquareFreeModulusError(NOT_SQUARE_FREE_MESSAGE, modulus=modulus)

    return epsilon(modulus) * jacobi_binary(a, modulus) * math.sqrt(modulus)


def square_divisors(modulus: int) -> tuple[int, ...]:
    """Return every z ≥ 1 with z² dividing the modulus, in increasing order."""
    return tuple(
        z for z in range(1, math.isqrt(modulus) + 1) if modulus % (z * z) == 0
    )


def _require_square_divisor(z: int, modulus: int) -> int:
    if z < 1 or modulus % (z * z) != 0:
        NOT_SQUARE_DIVISOR_MESSAGE: Final[str] = f"{z}² does not divide {modulus}."
        raise NotASquareDivisorError(NOT_SQUARE_DIVISOR_MESSAGE)

    return modulus // (z * z)


def _reduced_sum(t: int, reduced_modulus: int) -> complex:
    if reduced_modulus == 1:
        return 1 + 0j

    return gauss_sum(t % reduced_modulus, reduced_modulus)


def gauss_reduction_check(t: int, z: int, modulus: int, tolerance: float = RATIO_IDENTITY_TOLERANCE) -> bool:  # noqa: E501
    """
    Return whether G(t·z², χ_N) equals (φ(N)/φ(x))·G(t, χ_x) with x = N/z².

    For x = 1 the sum over the trivial modulus is taken to be 1.
    """
    require_natural(t)
    require_odd_modulus(modulus)
    reduced_modulus: int = _require_square_divisor(z, modulus)

    left_side: complex = gauss_sum((t * z * z) % modulus, modulus)
    right_side: complex = (
        euler_phi(modulus) / euler_phi(reduced_modulus)
    ) * _reduced_sum(t, reduced_modulus)

    return abs(left_side - right_side) <= tolerance


@dataclass(frozen=True, slots=True)
class DichotomyReport:
    """The outcome of scanning every Gauss sum of one modulus for the square-free dichotomy."""

    modulus: int
    square_free: bool
    max_violation: float
    coprime_count: int

    def passed(self, tolerance: float = SINGLE_SUM_TOLERANCE) -> bool:
        """Return whether the largest violation is within the given tolerance."""
        return self.max_violation < tolerance

    def to_dict(self) -> dict[str, object]:
        """Serialise this report into a JSON-compatible mapping."""
        return {
            "n": self.modulus,
            "square_free": self.square_free,
            "max_violation": self.max_violation,
            "coprime_count": self.coprime_count,
        }


def verify_dichotomy(modulus: int, method: GaussSumMethod = GaussSumMethod.DIRECT) -> DichotomyReport:  # noqa: E501
    """
    Scan every a in [0, N) & measure how far the Gauss sums are from the dichotomy.

    For square-free N the sums must vanish when gcd(a, N) > 1 & have magnitude √N otherwise;
    for other N the sums must vanish whenever gcd(a, N) = 1.
    """
    require_odd_modulus(modulus)

    table: GaussSumTable = gauss_table(modulus, method)
    coprime: npt.NDArray[np.bool_] = table.gcds() == 1
    magnitudes: npt.NDArray[np.float64] = table.magnitudes
    square_free: bool = is_square_free(modulus)

    violations: npt.NDArray[np.float64]
    if square_free:
        violations = np.where(
            coprime,
            np.abs(magnitudes - math.sqrt(modulus)),
            magnitudes,
        )
    else:
        violations = np.where(coprime, magnitudes, 0.0)

    return DichotomyReport(
        modulus=modulus,
        square_free=square_free,
        max_violation=float(np.max(violations)),
        coprime_count=int(np.count_nonzero(coprime)),
    )


def verify_closed_form(modulus: int) -> float:
    """Return the largest |G(a, χ) - ε_N·χ(a)·√N| over a coprime to the square-free N."""
    table: GaussSumTable = gauss_table(modulus)
    closed_forms: npt.NDArray[np.complex128] = np.array(
        [gauss_closed_form(a, modulus) for a in range(modulus)],
        dtype=np.complex128,
    )
    coprime: npt.NDArray[np.bool_] = table.gcds() == 1

    return float(np.max(np.abs(table.values - closed_forms)[coprime]))


@dataclass(frozen=True, slots=True)
class ReductionReport:
    """The largest deviation from the z² reduction identity across every square divisor."""

    modulus: int
    square_divisors: tuple[int, ...]
    checked_pairs: int
    max_deviation: float

    def passed(self, tolerance: float = RATIO_IDENTITY_TOLERANCE) -> bool:
        """Return whether the largest deviation is within the given tolerance."""
        return self.max_deviation <= tolerance


def verify_reduction(modulus: int) -> ReductionReport:
    """Check the z² reduction identity for every square divisor z² & every t coprime to N."""
    require_odd_modulus(modulus)

    table: GaussSumTable = gauss_table(modulus)
    multipliers: npt.NDArray[np.int64] = np.flatnonzero(table.gcds() == 1).astype(np.int64)
    phi_modulus: int = euler_phi(modulus)

    max_deviation: float = 0.0
    checked_pairs: int = 0
    divisors: tuple[int, ...] = square_divisors(modulus)

    z: int
    for z in divisors:
        reduced_modulus: int = modulus // (z * z)
        left_sides: npt.NDArray[np.complex128] = table.values[
            (multipliers * z * z) % modulus
        ]

        reduced_sums: npt.NDArray[np.complex128] = (
            np.ones(multipliers.shape, dtype=np.complex128)
            if reduced_modulus == 1
            else gauss_table(reduced_modulus).values[multipliers % reduced_modulus]
        )
        right_sides: npt.NDArray[np.complex128] = (
            phi_modulus / euler_phi(reduced_modulus)
        ) * reduced_sums

        if multipliers.size:
            max_deviation = max(
                max_deviation,
                float(np.max(np.abs(left_sides - right_sides))),
            )
        checked_pairs += int(multipliers.size)

    return ReductionReport(
        modulus=modulus,
        square_divisors=divisors,
        checked_pairs=checked_pairs,
        max_deviation=max_deviation,
    )


def symmetry_defects(modulus: int) -> tuple[float, float, float]:
    """
    Return the largest deviations from the reflection identities & from G(0, χ) = 0.

    The reflection identities are G(N - a) = conj(G(a)) & G(N - a) = χ(-1)·G(a).
    G(0, χ) only vanishes when N is not a perfect square, so the third value is 0 for
    perfect squares.
    """
    table: GaussSumTable = gauss_table(modulus)
    reflected: npt.NDArray[np.complex128] = table.values[
        (-np.arange(modulus, dtype=np.int64)) % modulus
    ]
    character_of_minus_one: int = jacobi_binary(modulus - 1, modulus)

    return (
        float(np.max(np.abs(reflected - np.conj(table.values)))),
        float(np.max(np.abs(reflected - character_of_minus_one * table.values))),
        0.0 if is_perfect_square(modulus) else abs(table[0]),
    )
