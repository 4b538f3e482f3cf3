"""
Division-free shift & subtract algorithms for the GCD and the Jacobi symbol.

Both loops are written round-for-round like the reversible networks built in
`reversible.binary_networks`, so that a classical run and a circuit run of the same
operands visit the same sequence of register values.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "JacobiValue",
    "round_bound",
    "binary_gcd",
    "jacobi_binary",
    "legendre",
    "require_natural",
    "require_odd_modulus",
)

from typing import Final, Literal, TypeAlias

from exceptions import (
    InvalidModulusError,
    LoopBoundExceededError,
    NotANaturalNumberError,
    NotPrimeModulusError,
)
from numtheory.trial_division import is_prime_by_trial_division

JacobiValue: TypeAlias = Literal[-1, 0, 1]


def require_natural(*values: int) -> None:
    """Raise `NotANaturalNumberError` if any of the given operands is negative."""
    value: int
    for value in values:
        if value < 0:
            NEGATIVE_OPERAND_MESSAGE: Final[str] = (
                f"Operand {value} is negative; only natural numbers are accepted."
            )
            raise NotANaturalNumberError(NEGATIVE_OPERAND_MESSAGE, value=value)


def require_odd_modulus(modulus: int) -> None:
    """Raise `InvalidModulusError` unless the given modulus is odd & at least 3."""
    if modulus < 3 or modulus % 2 == 0:
        INVALID_MODULUS_MESSAGE: Final[str] = (
            f"Modulus {modulus} is invalid: it must be an odd integer of at least 3."
        )
        raise InvalidModulusError(INVALID_MODULUS_MESSAGE, modulus=modulus)


def round_bound(u: int, v: int) -> int:
    """Return the static number of loop rounds allowed for the operands `u` & `v`."""
    return 2 * (u.bit_length() + v.bit_length())


def binary_gcd(u: int, v: int) -> int:
    """
    Return gcd(u, v) using only parity tests, halving & subtraction.

    The common power of two is stripped first, the operands are then oriented so that `u`
    is odd, and every following round subtracts the smaller operand from the larger when
    `v` is odd before halving `v`. `gcd(u, 0)` is `u` & `gcd(0, 0)` is 0.
    """
    require_natural(u, v)

    if u == 0 and v == 0:
        return 0

    common_twos: int = 0
    while u % 2 == 0 and v % 2 == 0:
        u >>= 1
        v >>= 1
        common_twos += 1

    if u % 2 == 0:
        u, v = v, u

    MAXIMUM_ROUNDS: Final[int] = round_bound(u, v)
    rounds: int = 0
    while v != 0:
        if rounds >= MAXIMUM_ROUNDS:
            UNTERMINATED_GCD_MESSAGE: Final[str] = (
                f"Binary GCD did not terminate within {MAXIMUM_ROUNDS} rounds."
            )
            raise LoopBoundExceededError(UNTERMINATED_GCD_MESSAGE)

        if v % 2 == 1:
            if u > v:
                u, v = v, u - v
            else:
                v -= u

        v >>= 1
        rounds += 1

    return u << common_twos


def jacobi_binary(m: int, modulus: int) -> JacobiValue:
    """
    Return the Jacobi symbol of `m` relative to the odd `modulus`, without factorising it.

    Each round that starts with a nonzero `u` orders & subtracts the operands when `u` is odd
    (negating the sign when both are 3 mod 4 & they get swapped) and then halves `u`
    (negating the sign when the modulus operand is 3 or 5 mod 8).
    """
    require_natural(m)
    require_odd_modulus(modulus)

    u: int = m
    v: int = modulus
    sign: int = 1

    MAXIMUM_ROUNDS: Final[int] = round_bound(u, v)
    rounds: int = 0
    while u != 0:
        if rounds >= MAXIMUM_ROUNDS:
            UNTERMINATED_JACOBI_MESSAGE: Final[str] = (
                f"Binary Jacobi did not terminate within {MAXIMUM_ROUNDS} rounds."
            )
            raise LoopBoundExceededError(UNTERMINATED_JACOBI_MESSAGE)

        if u % 2 == 1:
            if u < v:
                if u % 4 == 3 and v % 4 == 3:
                    sign = -sign
                u, v = v - u, u
            else:
                u -= v

        if v % 8 in (3, 5):
            sign = -sign
        u >>= 1
        rounds += 1

    if v != 1:
        return 0

    return 1 if sign == 1 else -1


def legendre(m: int, prime: int) -> JacobiValue:
    """
    Return the Legendre symbol of `m` modulo the odd prime `prime` via Euler's criterion.

    Primality of the modulus is confirmed by trial division, so this is only intended for
    desk-scale moduli.
    """
    require_natural(m)

    if prime % 2 == 0 or not is_prime_by_trial_division(prime):
        NOT_ODD_PRIME_MESSAGE: Final[str] = (
            f"Legendre symbol modulus {prime} is not an odd prime."
        )
        raise NotPrimeModulusError(NOT_ODD_PRIME_MESSAGE, modulus=prime)

    residue: int = pow(m, (prime - 1) // 2, prime)

    if residue == 0:
        return 0
    if residue == 1:
        return 1
    return -1
