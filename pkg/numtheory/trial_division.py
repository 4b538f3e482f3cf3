"""Trial-division primitives backing the desk-scale verification oracles."""

from collections.abc import Sequence

__all__: Sequence[str] = ("is_prime_by_trial_division", "trial_factorise")

import functools
import math
from collections.abc import Mapping
from typing import Final

from exceptions import NotANaturalNumberError


def is_prime_by_trial_division(candidate: int) -> bool:
    """Return whether `candidate` is prime, testing every odd divisor up to its square root."""
    if candidate < 2:
        return False
    if candidate % 2 == 0:
        return candidate == 2

    divisor: int
    for divisor in range(3, math.isqrt(candidate) + 1, 2):  # noqa: SIM110
        if candidate % divisor == 0:
            return False

    return True


@functools.lru_cache(maxsize=4096)
def _factor_pairs(value: int) -> tuple[tuple[int, int], ...]:
    pairs: list[tuple[int, int]] = []

    divisor: int = 2
    while divisor * divisor <= value:
        exponent: int = 0
        while value % divisor == 0:
            value //= divisor
            exponent += 1
        if exponent:
            pairs.append((divisor, exponent))
        divisor += 1 if divisor == 2 else 2

    if value > 1:
        pairs.append((value, 1))

    return tuple(pairs)


def trial_factorise(value: int) -> Mapping[int, int]:
    """
    Return the prime factorisation of `value` as a mapping of prime to exponent.

    The mapping is ordered by increasing prime; the factorisation of 1 is empty.
    """
    if value < 1:
        NOT_POSITIVE_MESSAGE: Final[str] = f"Cannot factorise {value}: it is not positive."
        raise NotANaturalNumberError(NOT_POSITIVE_MESSAGE, value=value)

    return dict(_factor_pairs(value))
