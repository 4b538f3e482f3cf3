"""Bit-level reversible circuits for the binary GCD & Jacobi algorithms."""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "MAXIMUM_CONSTRUCTION_BITS",
    "MINIMUM_BITS",
    "EXHAUSTIVE_INPUT_LIMIT",
    "AncillaRole",
    "CircuitReport",
    "CircuitState",
    "Control",
    "GateKind",
    "RegisterLayout",
    "ReversibleCircuit",
    "ReversibleGate",
    "ScalingFit",
    "VerificationStrategy",
    "build_gcd_circuit",
    "build_jacobi_circuit",
    "check_ancilla_contract",
    "check_circuit",
    "circuit_inputs",
    "circuit_inverse",
    "encode_jacobi_value",
    "expected_outputs",
    "fit_scaling",
    "from_netlist",
    "gate_count",
    "gate_counts",
    "run_register_values",
    "scaling_report_csv",
    "simulate_circuit",
    "to_netlist",
    "verify_permutation",
    "x_gate",
)


from reversible.binary_networks import (
    MAXIMUM_CONSTRUCTION_BITS,
    MINIMUM_BITS,
    build_gcd_circuit,
    build_jacobi_circuit,
    encode_jacobi_value,
)
from reversible.circuit import (
    AncillaRole,
    RegisterLayout,
    ReversibleCircuit,
    circuit_inverse,
    from_netlist,
    gate_count,
    to_netlist,
)
from reversible.gates import Control, GateKind, ReversibleGate, x_gate
from reversible.oracle_checks import (
    EXHAUSTIVE_INPUT_LIMIT,
    CircuitReport,
    check_circuit,
    circuit_inputs,
    expected_outputs,
)
from reversible.scaling import ScalingFit, fit_scaling, gate_counts, scaling_report_csv
from reversible.simulation import (
    CircuitState,
    VerificationStrategy,
    check_ancilla_contract,
    run_register_values,
    simulate_circuit,
    verify_permutation,
)
