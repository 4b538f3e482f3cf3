"""
Arithmetic oracles behind the U₁ & U₂ steps of the simulated pipeline.

An oracle evaluates gcd(m, N) & the register encoding of χ_N(m) for a batch of basis
values m. The classical oracle runs the binary algorithms directly, the circuit oracle
runs the same basis values through the reversible GCD & Jacobi networks.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "CIRCUIT_ORACLE_MODULUS_LIMIT",
    "ArithmeticOracle",
    "CircuitOracle",
    "ClassicalOracle",
    "OracleKind",
    "make_oracle",
)

import abc
import functools
from enum import StrEnum
from typing import TYPE_CHECKING, Final, final

import numpy as np

from exceptions import InvalidModulusError
from gauss import character_table
from numtheory import binary_gcd, require_odd_modulus
from reversible import (
    MINIMUM_BITS,
    ReversibleCircuit,
    build_gcd_circuit,
    build_jacobi_circuit,
    run_register_values,
)

if TYPE_CHECKING:
    import numpy.typing as npt

CIRCUIT_ORACLE_MODULUS_LIMIT: Final[int] = 1 << 6


class OracleKind(StrEnum):
    """Which implementation evaluates the arithmetic of U₁ & U₂."""

    CLASSICAL = "classical"
    CIRCUIT = "circuit"


class ArithmeticOracle(abc.ABC):
    """
    Abstract protocol definition of an arithmetic oracle for a fixed odd modulus.

    Subclasses define how gcd values & character encodings are evaluated; the public
    methods check that every input is a residue of the modulus.
    """

    KIND: OracleKind

    def __init__(self, modulus: int) -> None:
        """Initialise a new oracle for the given odd modulus."""
        require_odd_modulus(modulus)

        self.modulus: int = modulus

    @abc.abstractmethod
    def _gcd_values(self, residues: "npt.NDArray[np.int64]") -> "npt.NDArray[np.int64]":
        """Subclass implementation of `gcd_values()`."""

    @abc.abstractmethod
    def _character_encodings(self, residues: "npt.NDArray[np.int64]") -> "npt.NDArray[np.int64]":  # noqa: E501
        """Subclass implementation of `character_encodings()`."""

    def _require_residues(self, values: "npt.ArrayLike") -> "npt.NDArray[np.int64]":
        residues: npt.NDArray[np.int64] = np.atleast_1d(np.asarray(values, dtype=np.int64))

        if residues.size and (residues.min() < 0 or residues.max() >= self.modulus):
            NOT_RESIDUES_MESSAGE: Final[str] = (
                f"Oracle inputs must lie in [0, {self.modulus})."
            )
            raise InvalidModulusError(NOT_RESIDUES_MESSAGE, modulus=self.modulus)

        return residues

    @final
    def gcd_values(self, values: "npt.ArrayLike") -> "npt.NDArray[np.int64]":
        """Return gcd(m, N) for every given residue m."""
        return self._gcd_values(self._require_residues(values))

    @final
    def character_encodings(self, values: "npt.ArrayLike") -> "npt.NDArray[np.int64]":
        """Return χ_N(m) for every given residue m, with -1 encoded as N - 1."""
        return self._character_encodings(self._require_residues(values))


@functools.lru_cache(maxsize=64)
def _binary_gcd_table(modulus: int) -> "npt.NDArray[np.int64]":
    table: npt.NDArray[np.int64] = np.array(
        [binary_gcd(m, modulus) for m in range(modulus)],
        dtype=np.int64,
    )
    table.flags.writeable = False
    return table


class ClassicalOracle(ArithmeticOracle):
    """Oracle evaluating the binary GCD & binary Jacobi algorithms directly."""

    KIND = OracleKind.CLASSICAL

    def _gcd_values(self, residues: "npt.NDArray[np.int64]") -> "npt.NDArray[np.int64]":
        return _binary_gcd_table(self.modulus)[residues]

    def _character_encodings(self, residues: "npt.NDArray[np.int64]") -> "npt.NDArray[np.int64]":  # noqa: E501
        return character_table(self.modulus)[residues].astype(np.int64) % self.modulus


@functools.lru_cache(maxsize=8)
def _cached_gcd_circuit(bits: int) -> ReversibleCircuit:
    return build_gcd_circuit(bits)


@functools.lru_cache(maxsize=64)
def _cached_jacobi_circuit(bits: int, modulus: int) -> ReversibleCircuit:
    return build_jacobi_circuit(bits, modulus)


class CircuitOracle(ArithmeticOracle):
    """Oracle running every basis value through the clean reversible networks."""

    KIND = OracleKind.CIRCUIT

    def __init__(self, modulus: int) -> None:
        """Initialise a new circuit oracle, limited to moduli below 2**6."""
        super().__init__(modulus)

        if modulus >= CIRCUIT_ORACLE_MODULUS_LIMIT:
            MODULUS_TOO_LARGE_MESSAGE: Final[str] = (
                f"The circuit oracle only supports moduli below {CIRCUIT_ORACLE_MODULUS_LIMIT}."
            )
            raise InvalidModulusError(MODULUS_TOO_LARGE_MESSAGE, modulus=modulus)

        self.bits: int = max(MINIMUM_BITS, modulus.bit_length())

    def _gcd_values(self, residues: "npt.NDArray[np.int64]") -> "npt.NDArray[np.int64]":
        circuit: ReversibleCircuit = _cached_gcd_circuit(self.bits)
        return run_register_values(circuit, {"u": residues, "v": self.modulus})[
            circuit.output_register
        ]

    def _character_encodings(self, residues: "npt.NDArray[np.int64]") -> "npt.NDArray[np.int64]":  # noqa: E501
        circuit: ReversibleCircuit = _cached_jacobi_circuit(self.bits, self.modulus)
        return run_register_values(circuit, {"u": residues})[circuit.output_register]


def make_oracle(kind: OracleKind, modulus: int) -> ArithmeticOracle:
    """Return the oracle of the given kind for the given modulus."""
    return {
        OracleKind.CLASSICAL: ClassicalOracle,
        OracleKind.CIRCUIT: CircuitOracle,
    }[kind](modulus)
