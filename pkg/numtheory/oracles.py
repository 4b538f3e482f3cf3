"""
Factorisation-based oracles used to verify the division-free algorithms.

Everything in this module factorises its argument by trial division, so it exists only to
produce ground truth at desk scale. No decision of the simulated algorithm depends on it.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "euclid_gcd",
    "euler_phi",
    "jacobi_oracle",
    "phi_sieve",
    "squarefree_oracle",
    "is_square_free",
)

from typing import TYPE_CHECKING, Final

import numpy as np

from exceptions import NotANaturalNumberError
from numtheory.binary_algorithms import (
    JacobiValue,
    legendre,
    require_natural,
    require_odd_modulus,
)
from numtheory.decomposition import SquareFreeDecomposition
from numtheory.trial_division import trial_factorise

if TYPE_CHECKING:
    import numpy.typing as npt


def euclid_gcd(u: int, v: int) -> int:
    """Return gcd(u, v) by repeated remainders."""
    require_natural(u, v)

    while v:
        u, v = v, u % v

    return u


def jacobi_oracle(m: int, modulus: int) -> JacobiValue:
    """Return the Jacobi symbol as the product of Legendre symbols over the factorisation."""
    require_natural(m)
    require_odd_modulus(modulus)

    product: int = 1

    prime: int
    exponent: int
    for prime, exponent in trial_factorise(modulus).items():
        product *= legendre(m, prime) ** exponent

    if product == 0:
        return 0
    return 1 if product == 1 else -1


def euler_phi(value: int) -> int:
    """Return Euler's function of `value` from its prime factorisation."""
    if value < 1:
        NOT_POSITIVE_MESSAGE: Final[str] = (
            f"Euler's function is undefined for {value}: it is not positive."
        )
        raise NotANaturalNumberError(NOT_POSITIVE_MESSAGE, value=value)

    phi: int = value

    prime: int
    for prime in trial_factorise(value):
        phi -= phi // prime

    return phi


def phi_sieve(limit: int) -> "npt.NDArray[np.int64]":
    """Return an array holding Euler's function of every integer from 0 up to `limit`."""
    require_natural(limit)

    phi: npt.NDArray[np.int64] = np.arange(limit + 1, dtype=np.int64)

    candidate: int
    for candidate in range(2, limit + 1):
        if phi[candidate] == candidate:
            phi[candidate::candidate] -= phi[candidate::candidate] // candidate

    return phi


def squarefree_oracle(value: int) -> SquareFreeDecomposition:
    """Return the square-free decomposition of `value` from its full factorisation."""
    r: int = 1
    s: int = 1

    prime: int
    exponent: int
    for prime, exponent in trial_factorise(value).items():
        s *= prime ** (exponent // 2)
        if exponent % 2:
            r *= prime

    return SquareFreeDecomposition(r=r, s=s)


def is_square_free(value: int) -> bool:
    """Return whether no prime divides `value` more than once."""
    return all(exponent == 1 for exponent in trial_factorise(value).values())

