"""Exact classical number theory: binary GCD & Jacobi, Legendre, Euler φ & trial-division oracles."""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "JacobiValue",
    "SquareFreeDecomposition",
    "binary_gcd",
    "euclid_gcd",
    "euler_phi",
    "is_perfect_square",
    "is_prime_by_trial_division",
    "is_square_free",
    "jacobi_binary",
    "jacobi_oracle",
    "legendre",
    "lift_even",
    "phi_sieve",
    "require_natural",
    "require_odd_modulus",
    "round_bound",
    "squarefree_oracle",
    "strip_even",
    "trial_factorise",
)


from numtheory.binary_algorithms import (
    JacobiValue,
    binary_gcd,
    jacobi_binary,
    legendre,
    require_natural,
    require_odd_modulus,
    round_bound,
)
from numtheory.decomposition import (
    SquareFreeDecomposition,
    is_perfect_square,
    lift_even,
    strip_even,
)
from numtheory.oracles import (
    euclid_gcd,
    euler_phi,
    is_square_free,
    jacobi_oracle,
    phi_sieve,
    squarefree_oracle,
)
from numtheory.trial_division import is_prime_by_trial_division, trial_factorise
