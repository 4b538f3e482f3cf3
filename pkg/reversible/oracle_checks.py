"""
Equivalence of the GCD & Jacobi networks with their classical oracles.

Networks of a few bits are checked on every input; wider networks on a seeded sample.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "EXHAUSTIVE_INPUT_LIMIT",
    "CircuitReport",
    "check_circuit",
    "circuit_inputs",
    "expected_outputs",
)

import logging
from collections import Counter
from dataclasses import dataclass
from logging import Logger
from typing import TYPE_CHECKING, Final

import numpy as np

from exceptions import MalformedGateError
from numtheory import euclid_gcd, jacobi_oracle
from reversible.binary_networks import encode_jacobi_value
from reversible.circuit import AncillaRole, ReversibleCircuit, gate_count
from reversible.gates import GateKind
from reversible.simulation import check_ancilla_contract, run_register_values, verify_permutation

if TYPE_CHECKING:
    import numpy.typing as npt

logger: Logger = logging.getLogger("gauss-squarefree")

EXHAUSTIVE_INPUT_LIMIT: Final[int] = 1 << 16
_SAMPLE_SIZE: Final[int] = 4096


@dataclass(frozen=True, slots=True)
class CircuitReport:
    """The gate counts of one network & the outcome of every check run on it."""

    name: str
    parameters: dict[str, int]
    width: int
    gate_counts: Counter[GateKind]
    inputs_checked: int
    exhaustive_inputs: bool
    oracle_match: bool
    ancilla_contract: bool
    permutation: bool | None = None

    @property
    def passed(self) -> bool:
        return self.oracle_match and self.ancilla_contract and self.permutation is not False

    def to_dict(self) -> dict[str, object]:
        return {
            "circuit": self.name,
            "parameters": dict(self.parameters),
            "width": self.width,
            "gates": sum(self.gate_counts.values()),
            "gate_counts": {kind.value: self.gate_counts[kind] for kind in GateKind},
            "inputs_checked": self.inputs_checked,
            "exhaustive_inputs": self.exhaustive_inputs,
            "oracle_match": self.oracle_match,
            "ancilla_contract": self.ancilla_contract,
            "permutation": self.permutation,
            "passed": self.passed,
        }


def _require_known_network(circuit: ReversibleCircuit) -> None:
    if circuit.name not in ("gcd", "jacobi") or "bits" not in circuit.parameters:
        UNKNOWN_NETWORK_MESSAGE: Final[str] = (
            f"Circuit {circuit.name!r} is neither a GCD nor a Jacobi network."
        )
        raise MalformedGateError(UNKNOWN_NETWORK_MESSAGE)


def _input_batch(input_count: int, seed: int) -> "npt.NDArray[np.int64]":
    if input_count <= EXHAUSTIVE_INPUT_LIMIT:
        return np.arange(input_count, dtype=np.int64)

    return np.random.default_rng(seed).integers(0, input_count, _SAMPLE_SIZE, dtype=np.int64)


def _input_count(circuit: ReversibleCircuit) -> int:
    if circuit.name == "jacobi":
        return circuit.parameters["modulus"]

    return 1 << (2 * circuit.parameters["bits"])


def circuit_inputs(circuit: ReversibleCircuit, seed: int = 0) -> dict[str, "npt.NDArray[np.int64]"]:  # noqa: E501
    """
    Return the batch of operands the network is checked on.

    GCD networks take every pair of n-bit operands & Jacobi networks every residue of
    their modulus, unless there are more than 2**16 of them; then a seeded sample is taken.
    """
    _require_known_network(circuit)
    bits: int = circuit.parameters["bits"]

    batch: npt.NDArray[np.int64] = _input_batch(_input_count(circuit), seed)

    if circuit.name == "jacobi":
        return {"u": batch}

    return {"u": batch & ((1 << bits) - 1), "v": batch >> bits}


def expected_outputs(circuit: ReversibleCircuit, inputs: dict[str, "npt.NDArray[np.int64]"]) -> "npt.NDArray[np.int64]":  # noqa: E501
    """Return what the classical oracles put in the output register for every input."""
    _require_known_network(circuit)

    if circuit.name == "gcd":
        return np.array(
            [euclid_gcd(int(u), int(v)) for u, v in zip(inputs["u"], inputs["v"], strict=True)],
            dtype=np.int64,
        )

    modulus: int = circuit.parameters["modulus"]
    return np.array(
        [encode_jacobi_value(jacobi_oracle(int(u), modulus), modulus) for u in inputs["u"]],
        dtype=np.int64,
    )


def check_circuit(circuit: ReversibleCircuit, *, permutation: bool = True, seed: int = 0) -> CircuitReport:  # noqa: E501
    """
    Check a GCD or Jacobi network against its classical oracle & its declared register roles.

    History networks keep the sign of the Jacobi rounds in their output even when the
    operand shares a factor with the modulus, so only coprime operands are compared for them.
    """
    inputs: dict[str, npt.NDArray[np.int64]] = circuit_inputs(circuit, seed)
    outputs: npt.NDArray[np.int64] = run_register_values(circuit, inputs)[
        circuit.output_register
    ]
    expected: npt.NDArray[np.int64] = expected_outputs(circuit, inputs)

    compared: npt.NDArray[np.bool_] = np.ones(expected.shape, dtype=np.bool_)
    if circuit.name == "jacobi" and circuit.roles.get("out") != AncillaRole.OUTPUT:
        modulus: int = circuit.parameters["modulus"]
        compared = np.gcd(inputs["u"], modulus) == 1

    report: CircuitReport = CircuitReport(
        name=circuit.name,
        parameters=dict(circuit.parameters),
        width=circuit.width,
        gate_counts=gate_count(circuit),
        inputs_checked=int(expected.size),
        exhaustive_inputs=_input_count(circuit) <= EXHAUSTIVE_INPUT_LIMIT,
        oracle_match=bool(np.array_equal(outputs[compared], expected[compared])),
        ancilla_contract=check_ancilla_contract(circuit, inputs),
        permutation=verify_permutation(circuit) if permutation else None,
    )

    logger.debug("Checked circuit %r %s: %s", circuit.name, circuit.parameters, report.passed)

    return report
