"""
Basis-state & superposition simulation of reversible circuits, plus bijection verification.

Circuits run on numpy bit matrices with one row per basis branch, so a whole batch of inputs
(or every basis state of a narrow circuit) is pushed through each gate at once.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "MAXIMUM_SUPERPOSITION_BRANCHES",
    "CircuitState",
    "VerificationStrategy",
    "check_ancilla_contract",
    "run_register_values",
    "simulate_circuit",
    "verify_permutation",
)

import functools
import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import StrEnum
from logging import Logger
from typing import TYPE_CHECKING, Final, Self

import numpy as np

from config import settings
from exceptions import CircuitTooWideError, ExhaustiveLimitExceededError, MalformedGateError
from reversible.circuit import AncillaRole, RegisterLayout, ReversibleCircuit
from reversible.gates import ReversibleGate, bits_to_values, values_to_bits

if TYPE_CHECKING:
    import numpy.typing as npt

logger: Logger = logging.getLogger("gauss-squarefree")

MAXIMUM_SUPERPOSITION_BRANCHES: Final[int] = 1 << 16
_EXHAUSTIVE_CHUNK_SIZE: Final[int] = 1 << 16
_AMPLITUDE_TOLERANCE: Final[float] = 1e-15


class VerificationStrategy(StrEnum):
    """How `verify_permutation()` establishes that a circuit is a bijection."""

    AUTO = "auto"
    EXHAUSTIVE = "exhaustive"
    GATE_LOCAL = "gate-local"


@dataclass(frozen=True, slots=True, eq=False)
class CircuitState:
    """
    A sparse superposition of circuit basis states.

    Each branch is keyed by the value of every register, in layout order.
    """

    layout: RegisterLayout
    branches: Mapping[tuple[int, ...], complex]

    @classmethod
    def basis(cls, layout: RegisterLayout, **register_values: int) -> Self:
        """Return the basis state holding the given register values & 0 everywhere else."""
        return cls.superposition(layout, ((1 + 0j, register_values),))

    @classmethod
    def superposition(cls, layout: RegisterLayout, terms: Iterable[tuple[complex, Mapping[str, int]]]) -> Self:  # noqa: E501
        """Return the superposition of the given (amplitude, register values) terms."""
        branches: dict[tuple[int, ...], complex] = {}

        amplitude: complex
        register_values: Mapping[str, int]
        for amplitude, register_values in terms:
            unknown_registers: set[str] = set(register_values) - set(layout.names)
            if unknown_registers:
                UNKNOWN_REGISTER_MESSAGE: Final[str] = (
                    f"Unknown registers {sorted(unknown_registers)!r} in circuit input."
                )
                raise MalformedGateError(UNKNOWN_REGISTER_MESSAGE)

            key: tuple[int, ...] = tuple(
                register_values.get(name, 0) for name in layout.names
            )

            name: str
            value: int
            for name, value in zip(layout.names, key, strict=True):
                if not 0 <= value < 1 << layout.register_width(name):
                    OUT_OF_RANGE_MESSAGE: Final[str] = (
                        f"Value {value} does not fit the "
                        f"{layout.register_width(name)}-bit register {name!r}."
                    )
                    raise MalformedGateError(OUT_OF_RANGE_MESSAGE)

            branches[key] = branches.get(key, 0j) + amplitude

        return cls(layout=layout, branches=branches)

    def register(self, name: str) -> dict[tuple[int, ...], int]:
        """Return the value of the named register in every branch."""
        index: int = self.layout.names.index(name)
        return {key: key[index] for key in self.branches}

    def register_amplitudes(self, name: str) -> dict[int, complex]:
        """Return the amplitude summed per value of the named register."""
        index: int = self.layout.names.index(name)
        amplitudes: dict[int, complex] = {}

        key: tuple[int, ...]
        amplitude: complex
        for key, amplitude in self.branches.items():
            amplitudes[key[index]] = amplitudes.get(key[index], 0j) + amplitude

        return dict(sorted(amplitudes.items()))

    def is_close(self, other: "CircuitState", tolerance: float = 1e-12) -> bool:
        """Return whether both states have the same layout & amplitudes within tolerance."""
        if self.layout != other.layout:
            return False

        return all(
            abs(self.branches.get(key, 0j) - other.branches.get(key, 0j)) <= tolerance
            for key in set(self.branches) | set(other.branches)
        )


def _load_bits(layout: RegisterLayout, register_values: Mapping[str, "npt.ArrayLike"]) -> "npt.NDArray[np.uint8]":  # noqa: E501
    columns: dict[str, npt.NDArray[np.int64]] = {
        name: np.atleast_1d(np.asarray(values, dtype=np.int64))
        for name, values in register_values.items()
    }
    row_count: int = max((len(values) for values in columns.values()), default=1)
    bits: npt.NDArray[np.uint8] = np.zeros((row_count, layout.width), dtype=np.uint8)

    name: str
    values: npt.NDArray[np.int64]
    for name, values in columns.items():
        register_bits: list[int] = list(layout.bits(name))
        bits[:, register_bits] = values_to_bits(
            np.broadcast_to(values, (row_count,)),
            len(register_bits),
        )

    return bits


def _run_gates(gates: Iterable[ReversibleGate], bits: "npt.NDArray[np.uint8]") -> None:
    gate: ReversibleGate
    for gate in gates:
        gate.apply(bits)


def run_register_values(circuit: ReversibleCircuit, register_values: Mapping[str, "npt.ArrayLike"]) -> dict[str, "npt.NDArray[np.int64]"]:  # noqa: E501
    """
    Run a batch of basis inputs through the circuit & return every register's final values.

    Each mapped register receives one value per batch row (scalars are broadcast) & every
    unmapped register starts at 0.
    """
    bits: npt.NDArray[np.uint8] = _load_bits(circuit.layout, register_values)
    _run_gates(circuit.gates, bits)

    return {
        name: bits_to_values(bits[:, list(circuit.layout.bits(name))])
        for name in circuit.layout.names
    }


def simulate_circuit(circuit: ReversibleCircuit, state: CircuitState | Mapping[str, int]) -> CircuitState:  # noqa: E501
    """Apply the circuit to a basis state (given as register values) or a superposition."""
    initial_state: CircuitState = (
        state
        if isinstance(state, CircuitState)
        else CircuitState.basis(circuit.layout, **state)
    )

    if initial_state.layout != circuit.layout:
        LAYOUT_MISMATCH_MESSAGE: Final[str] = (
            f"Input state layout does not match the layout of circuit {circuit.name!r}."
        )
        raise MalformedGateError(LAYOUT_MISMATCH_MESSAGE)

    if len(initial_state.branches) > MAXIMUM_SUPERPOSITION_BRANCHES:
        TOO_MANY_BRANCHES_MESSAGE: Final[str] = (
            f"Cannot simulate a superposition of {len(initial_state.branches)} branches; "
            f"the limit is {MAXIMUM_SUPERPOSITION_BRANCHES}."
        )
        raise ExhaustiveLimitExceededError(TOO_MANY_BRANCHES_MESSAGE)

    if not initial_state.branches:
        return initial_state

    keys: list[tuple[int, ...]] = list(initial_state.branches)
    final_values: dict[str, npt.NDArray[np.int64]] = run_register_values(
        circuit,
        {
            name: [key[index] for key in keys]
            for index, name in enumerate(circuit.layout.names)
        },
    )

    branches: dict[tuple[int, ...], complex] = {}

    row: int
    key: tuple[int, ...]
    for row, key in enumerate(keys):
        final_key: tuple[int, ...] = tuple(
            int(final_values[name][row]) for name in circuit.layout.names
        )
        branches[final_key] = branches.get(final_key, 0j) + initial_state.branches[key]

    return CircuitState(
        layout=circuit.layout,
        branches={
            key: amplitude
            for key, amplitude in branches.items()
            if abs(amplitude) > _AMPLITUDE_TOLERANCE
        },
    )


def _is_exhaustive_bijection(gates: Sequence[ReversibleGate], width: int) -> bool:
    seen: npt.NDArray[np.bool_] = np.zeros(1 << width, dtype=np.bool_)

    start: int
    for start in range(0, 1 << width, _EXHAUSTIVE_CHUNK_SIZE):
        inputs: npt.NDArray[np.int64] = np.arange(
            start,
            min(start + _EXHAUSTIVE_CHUNK_SIZE, 1 << width),
            dtype=np.int64,
        )
        bits: npt.NDArray[np.uint8] = values_to_bits(inputs, width)
        _run_gates(gates, bits)

        images: npt.NDArray[np.int64] = bits_to_values(bits)
        if np.unique(images).size != images.size or seen[images].any():
            return False
        seen[images] = True

    return bool(seen.all())


@functools.lru_cache(maxsize=4096)
def _is_local_bijection(local_gate: ReversibleGate, support_width: int) -> bool:
    return _is_exhaustive_bijection((local_gate,), support_width)


def verify_permutation(circuit: ReversibleCircuit, strategy: VerificationStrategy = VerificationStrategy.AUTO) -> bool:  # noqa: E501
    """
    Return whether the circuit maps the full computational basis bijectively.

    Circuits no wider than the `CIRCUIT_VERIFY_MAX_WIDTH` setting get an exhaustive image
    check. Wider circuits are checked one gate at a time, each gate exhaustively over its
    own support bits.
    """
    max_width: int = settings["CIRCUIT_VERIFY_MAX_WIDTH"]

    if strategy == VerificationStrategy.AUTO:
        strategy = (
            VerificationStrategy.EXHAUSTIVE
            if circuit.width <= max_width
            else VerificationStrategy.GATE_LOCAL
        )

    if strategy == VerificationStrategy.EXHAUSTIVE:
        if circuit.width > max_width:
            TOO_WIDE_MESSAGE: Final[str] = (
                f"Circuit {circuit.name!r} is {circuit.width} bits wide; exhaustive "
                f"verification is limited to {max_width} bits."
            )
            raise CircuitTooWideError(TOO_WIDE_MESSAGE)

        logger.debug("Exhaustively verifying %d-bit circuit %r", circuit.width, circuit.name)
        return _is_exhaustive_bijection(circuit.gates, circuit.width)

    logger.debug("Verifying circuit %r gate by gate", circuit.name)

    gate: ReversibleGate
    for gate in circuit.gates:
        support: tuple[int, ...] = gate.support
        if len(support) > max_width:
            GATE_TOO_WIDE_MESSAGE: Final[str] = (
                f"Gate {gate.to_netlist_line()!r} spans {len(support)} bits; exhaustive "
                f"verification is limited to {max_width} bits."
            )
            raise CircuitTooWideError(GATE_TOO_WIDE_MESSAGE)

        local_gate: ReversibleGate = gate.remapped(
            {bit: index for index, bit in enumerate(support)}
        )
        if not _is_local_bijection(local_gate, len(support)):
            return False

    return True


def check_ancilla_contract(circuit: ReversibleCircuit, register_values: Mapping[str, "npt.ArrayLike"]) -> bool:  # noqa: E501
    """
    Return whether every declared register role holds on the given batch of inputs.

    Clean registers must finish at 0 & input registers must finish holding their operands.
    """
    final_values: dict[str, npt.NDArray[np.int64]] = run_register_values(
        circuit,
        register_values,
    )

    name: str
    for name in circuit.registers_with_role(AncillaRole.CLEAN):
        if final_values[name].any():
            logger.debug("Clean register %r of %r left dirty", name, circuit.name)
            return False

    for name in circuit.registers_with_role(AncillaRole.INPUT):
        expected: npt.NDArray[np.int64] = np.broadcast_to(
            np.asarray(register_values.get(name, 0), dtype=np.int64),
            final_values[name].shape,
        )
        if not np.array_equal(final_values[name], expected):
            logger.debug("Input register %r of %r was not restored", name, circuit.name)
            return False

    return True
