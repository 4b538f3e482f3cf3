"""Test suite for the reversible package."""

from collections.abc import Sequence

__all__: Sequence[str] = ()

import math
from typing import TYPE_CHECKING, Final

import numpy as np
import pytest

from exceptions import (
    BitWidthOutOfRangeError,
    CircuitTooWideError,
    InvalidModulusError,
    InvalidRunConfigError,
    MalformedGateError,
)
from numtheory import binary_gcd, jacobi_binary
from reversible import (
    AncillaRole,
    CircuitReport,
    CircuitState,
    Control,
    GateKind,
    RegisterLayout,
    ReversibleCircuit,
    ReversibleGate,
    ScalingFit,
    VerificationStrategy,
    build_gcd_circuit,
    build_jacobi_circuit,
    check_ancilla_contract,
    check_circuit,
    circuit_inverse,
    encode_jacobi_value,
    fit_scaling,
    from_netlist,
    gate_count,
    gate_counts,
    run_register_values,
    scaling_report_csv,
    simulate_circuit,
    to_netlist,
    verify_permutation,
    x_gate,
)

if TYPE_CHECKING:
    from collections import Counter
    from collections.abc import Callable


def _two_bit_circuit(*gates: ReversibleGate) -> ReversibleCircuit:
    return ReversibleCircuit(
        name="pair",
        layout=RegisterLayout.build(("a", 1), ("b", 1)),
        gates=gates,
        roles={"a": AncillaRole.INPUT, "b": AncillaRole.OUTPUT},
        output_register="b",
        input_registers=("a",),
    )


class TestGates:
    """Test case to unit-test the construction & validation of single gates."""

    @pytest.mark.parametrize(
        ("control_count", "expected_kind"),
        ((0, GateKind.NOT), (1, GateKind.CNOT), (2, GateKind.TOFFOLI), (3, GateKind.MCX)),
    )
    def test_x_gate_kind(self, control_count: int, expected_kind: GateKind) -> None:
        """Test that the NOT family is named by its number of controls."""
        controls: tuple[Control, ...] = tuple(Control(bit) for bit in range(1, control_count + 1))  # noqa: E501

        assert x_gate(0, *controls).kind == expected_kind

    @staticmethod
    def test_target_equal_to_control_rejected() -> None:
        """Test that a gate controlled on its own target cannot be built."""
        with pytest.raises(MalformedGateError):
            x_gate(0, Control(0))

    @staticmethod
    def test_swap_of_unequal_groups_rejected() -> None:
        """Test that a controlled swap needs two bit groups of equal width."""
        with pytest.raises(MalformedGateError):
            ReversibleGate(kind=GateKind.CSWAP, targets=(0, 1), operand=(2,))

    @staticmethod
    def test_addition_needs_one_addend() -> None:
        """Test that a modular addition without an operand or a constant is rejected."""
        with pytest.raises(MalformedGateError):
            ReversibleGate(kind=GateKind.MODULAR_ADD, targets=(0, 1))

    @pytest.mark.parametrize("token", ("3+", "12-"))
    def test_control_tokens(self, token: str) -> None:
        """Test that controls are rendered & parsed in netlist notation."""
        assert str(Control.parse(token)) == token

    @pytest.mark.parametrize("token", ("3", "+", "a+", "3*"))
    def test_invalid_control_tokens(self, token: str) -> None:
        """Test that malformed control tokens are rejected."""
        with pytest.raises(MalformedGateError):
            Control.parse(token)

    @staticmethod
    def test_inverse_undoes_modular_addition() -> None:
        """Test that a constant addition followed by its inverse is the identity."""
        gate: ReversibleGate = ReversibleGate(
            kind=GateKind.MODULAR_ADD,
            targets=(0, 1, 2, 3),
            constant=5,
        )
        circuit: ReversibleCircuit = ReversibleCircuit(
            name="adder",
            layout=RegisterLayout.build(("x", 4)),
            gates=(gate, gate.inverse()),
            roles={"x": AncillaRole.INPUT},
            output_register="x",
            input_registers=("x",),
        )

        assert run_register_values(circuit, {"x": np.arange(16)})["x"].tolist() == list(range(16))  # noqa: E501


class TestSimulation:
    """Test case to unit-test basis & superposition simulation."""

    @staticmethod
    def test_empty_circuit_is_identity() -> None:
        """Test that a circuit without gates leaves its input unchanged."""
        state: CircuitState = simulate_circuit(_two_bit_circuit(), {"a": 1})

        assert state.register("a") == {(1, 0): 1}

    @staticmethod
    def test_not_twice_is_identity() -> None:
        """Test that NOT is an involution."""
        circuit: ReversibleCircuit = _two_bit_circuit(x_gate(0), x_gate(0))

        assert simulate_circuit(circuit, {"a": 1}).register_amplitudes("a") == {1: 1}

    @staticmethod
    def test_cnot_copies_control() -> None:
        """Test that a CNOT writes its control into a zeroed target."""
        circuit: ReversibleCircuit = _two_bit_circuit(x_gate(1, Control(0)))

        assert simulate_circuit(circuit, {"a": 1}).register_amplitudes("b") == {1: 1}
        assert simulate_circuit(circuit, {"a": 0}).register_amplitudes("b") == {0: 1}

    @staticmethod
    def test_gcd_circuit_on_a_superposition() -> None:
        """Test that (|12, 8⟩ + |9, 6⟩)/√2 leaves (|4⟩ + |3⟩)/√2 in the output register."""
        AMPLITUDE: Final[complex] = complex(1 / math.sqrt(2))

        circuit: ReversibleCircuit = build_gcd_circuit(4)
        state: CircuitState = simulate_circuit(
            circuit,
            CircuitState.superposition(
                circuit.layout,
                ((AMPLITUDE, {"u": 12, "v": 8}), (AMPLITUDE, {"u": 9, "v": 6})),
            ),
        )

        output_amplitudes: dict[int, complex] = state.register_amplitudes("out")

        assert set(output_amplitudes) == {3, 4}
        assert all(abs(value - AMPLITUDE) < 1e-12 for value in output_amplitudes.values())

    @staticmethod
    def test_linearity() -> None:
        """Test that simulating α|x⟩ + β|y⟩ is α·C|x⟩ + β·C|y⟩ on random superpositions."""
        circuit: ReversibleCircuit = build_jacobi_circuit(4, 15)
        generator: np.random.Generator = np.random.default_rng(7)

        trial: int
        for trial in range(10):
            first_input: int
            second_input: int
            first_input, second_input = generator.choice(15, size=2, replace=False).tolist()
            alpha: complex = complex(generator.normal(), generator.normal())
            beta: complex = complex(generator.normal(), generator.normal())

            combined: CircuitState = simulate_circuit(
                circuit,
                CircuitState.superposition(
                    circuit.layout,
                    ((alpha, {"u": first_input}), (beta, {"u": second_input})),
                ),
            )
            first: CircuitState = simulate_circuit(circuit, {"u": first_input})
            second: CircuitState = simulate_circuit(circuit, {"u": second_input})

            expected: CircuitState = CircuitState(
                layout=circuit.layout,
                branches={
                    **{key: alpha * amplitude for key, amplitude in first.branches.items()},
                    **{key: beta * amplitude for key, amplitude in second.branches.items()},
                },
            )

            assert combined.is_close(expected), f"trial {trial}"

    @staticmethod
    def test_unknown_register_rejected() -> None:
        """Test that an input naming a missing register is rejected."""
        with pytest.raises(MalformedGateError):
            simulate_circuit(_two_bit_circuit(), {"c": 1})


class TestGCDCircuit:
    """Test case to unit-test the reversible binary GCD network."""

    @pytest.mark.parametrize(("u", "v", "expected"), ((12, 8, 4), (1, 13, 1), (0, 9, 9), (0, 0, 0)))  # noqa: E501
    def test_known_values(self, u: int, v: int, expected: int) -> None:
        """Test that known gcd values appear in the output register."""
        circuit: ReversibleCircuit = build_gcd_circuit(4)

        assert run_register_values(circuit, {"u": u, "v": v})["out"].tolist() == [expected]

    @staticmethod
    def test_every_pair_of_4_bit_operands() -> None:
        """Test that every pair of 4-bit operands matches the classical binary GCD."""
        circuit: ReversibleCircuit = build_gcd_circuit(4)
        operands: np.ndarray = np.arange(256)

        outputs: np.ndarray = run_register_values(
            circuit,
            {"u": operands & 15, "v": operands >> 4},
        )["out"]

        assert outputs.tolist() == [binary_gcd(pair & 15, pair >> 4) for pair in range(256)]

    @pytest.mark.parametrize("bits", (2, 3, 4, 5, 6))
    def test_passes_every_check(self, bits: int) -> None:
        """Test that the clean network matches its oracle & restores its ancillas."""
        report: CircuitReport = check_circuit(build_gcd_circuit(bits), permutation=False)

        assert report.exhaustive_inputs
        assert report.inputs_checked == 1 << (2 * bits)
        assert report.oracle_match
        assert report.ancilla_contract

    @staticmethod
    def test_history_variant_keeps_garbage() -> None:
        """Test that the history network leaves its result in r & declares garbage."""
        circuit: ReversibleCircuit = build_gcd_circuit(4, clean=False)

        assert circuit.output_register == "r"
        assert AncillaRole.GARBAGE in set(circuit.roles.values())
        assert check_circuit(circuit, permutation=False).oracle_match

    @pytest.mark.parametrize("bits", (1, 25))
    def test_bit_width_limits(self, bits: int) -> None:
        """Test that widths outside the construction range are rejected."""
        with pytest.raises(BitWidthOutOfRangeError):
            build_gcd_circuit(bits)


class TestJacobiCircuit:
    """Test case to unit-test the reversible binary Jacobi network."""

    @pytest.mark.parametrize(("m", "expected"), ((2, 1), (1, 1), (7, 14), (3, 0)))
    def test_known_values(self, m: int, expected: int) -> None:
        """Test that χ₁₅(m) appears in the output register with -1 encoded as 14."""
        circuit: ReversibleCircuit = build_jacobi_circuit(4, 15)

        assert run_register_values(circuit, {"u": m})["out"].tolist() == [expected]

    @pytest.mark.parametrize("modulus", (3, 5, 7, 9, 11, 13, 15))
    def test_every_residue_matches_binary_jacobi(self, modulus: int) -> None:
        """Test that every residue of the modulus matches the classical Jacobi symbol."""
        circuit: ReversibleCircuit = build_jacobi_circuit(4, modulus)

        outputs: list[int] = run_register_values(circuit, {"u": np.arange(modulus)})[
            "out"
        ].tolist()

        assert outputs == [
            encode_jacobi_value(jacobi_binary(m, modulus), modulus) for m in range(modulus)
        ]

    @pytest.mark.parametrize(("bits", "modulus"), ((2, 3), (3, 5), (4, 9), (5, 21), (6, 45), (6, 63)))  # noqa: E501
    def test_passes_every_check(self, bits: int, modulus: int) -> None:
        """Test that the clean network matches its oracle & restores its ancillas."""
        report: CircuitReport = check_circuit(
            build_jacobi_circuit(bits, modulus),
            permutation=False,
        )

        assert report.oracle_match
        assert report.ancilla_contract

    @staticmethod
    def test_default_modulus() -> None:
        """Test that the modulus defaults to 2**bits - 1."""
        assert build_jacobi_circuit(5).parameters["modulus"] == 31

    @staticmethod
    def test_history_variant_matches_on_coprime_inputs() -> None:
        """Test that the history network is checked on coprime inputs only."""
        assert check_circuit(build_jacobi_circuit(4, 15, clean=False), permutation=False).passed

    @pytest.mark.parametrize(("bits", "modulus"), ((4, 16), (4, 17), (3, 1)))
    def test_invalid_modulus_rejected(self, bits: int, modulus: int) -> None:
        """Test that even moduli & moduli wider than the register are rejected."""
        with pytest.raises(InvalidModulusError):
            build_jacobi_circuit(bits, modulus)


class TestPermutation:
    """Test case to unit-test the bijection checks."""

    @staticmethod
    def test_single_cnot() -> None:
        """Test that a single CNOT is a permutation of the basis."""
        assert verify_permutation(_two_bit_circuit(x_gate(1, Control(0))))

    @staticmethod
    def test_small_jacobi_network_exhaustively() -> None:
        """Test that the 2-bit Jacobi network is a bijection on its full basis."""
        circuit: ReversibleCircuit = build_jacobi_circuit(2, 3)

        assert circuit.width <= 24
        assert verify_permutation(circuit, VerificationStrategy.EXHAUSTIVE)

    @pytest.mark.parametrize("bits", (2, 4, 6))
    def test_networks_gate_by_gate(self, bits: int) -> None:
        """Test that every gate of the GCD & Jacobi networks is a local bijection."""
        assert verify_permutation(build_gcd_circuit(bits), VerificationStrategy.GATE_LOCAL)
        assert verify_permutation(build_jacobi_circuit(bits), VerificationStrategy.GATE_LOCAL)

    @staticmethod
    def test_exhaustive_check_of_wide_circuit_rejected() -> None:
        """Test that a circuit wider than the exhaustive limit cannot be checked exhaustively."""  # noqa: E501
        with pytest.raises(CircuitTooWideError):
            verify_permutation(build_gcd_circuit(6), VerificationStrategy.EXHAUSTIVE)

    @staticmethod
    def test_inverse_restores_inputs() -> None:
        """Test that running a network & then its inverse returns every register to its input."""  # noqa: E501
        circuit: ReversibleCircuit = build_gcd_circuit(3)
        forward: dict[str, np.ndarray] = run_register_values(
            circuit,
            {"u": np.arange(8), "v": 5},
        )
        backward: dict[str, np.ndarray] = run_register_values(circuit_inverse(circuit), forward)

        assert backward["u"].tolist() == list(range(8))
        assert backward["v"].tolist() == [5] * 8
        assert not backward["out"].any()

    @staticmethod
    def test_dirty_ancilla_detected() -> None:
        """Test that a clean register left holding a value breaks the ancilla contract."""
        circuit: ReversibleCircuit = ReversibleCircuit(
            name="dirty",
            layout=RegisterLayout.build(("a", 1), ("scratch", 1)),
            gates=(x_gate(1),),
            roles={"a": AncillaRole.INPUT, "scratch": AncillaRole.CLEAN},
            output_register="a",
            input_registers=("a",),
        )

        assert not check_ancilla_contract(circuit, {"a": [0, 1]})


class TestNetlist:
    """Test case to unit-test netlist serialisation."""

    @staticmethod
    def test_round_trip() -> None:
        """Test that a parsed netlist rebuilds the same circuit."""
        circuit: ReversibleCircuit = build_jacobi_circuit(4, 15)
        rebuilt: ReversibleCircuit = from_netlist(to_netlist(circuit))

        assert rebuilt.gates == circuit.gates
        assert rebuilt.layout == circuit.layout
        assert dict(rebuilt.roles) == dict(circuit.roles)
        assert rebuilt.output_register == circuit.output_register
        assert rebuilt.input_registers == circuit.input_registers
        assert dict(rebuilt.parameters) == dict(circuit.parameters)

    @staticmethod
    def test_netlist_starts_with_name() -> None:
        """Test that the netlist opens with the circuit's name."""
        assert to_netlist(build_gcd_circuit(2)).splitlines()[0] == "circuit gcd"

    @staticmethod
    def test_out_of_range_gate_rejected() -> None:
        """Test that a gate addressing a bit beyond the layout is rejected."""
        with pytest.raises(MalformedGateError):
            _two_bit_circuit(x_gate(5))


class TestScaling:
    """Test case to unit-test gate counts & their fitted scaling."""

    @staticmethod
    def test_empty_circuit_has_no_gates() -> None:
        """Test that a circuit without gates counts zero gates."""
        assert sum(gate_count(_two_bit_circuit()).values()) == 0

    @staticmethod
    def test_counts_are_monotone() -> None:
        """Test that gate counts never decrease as the bit width grows."""
        counts: dict[int, Counter[GateKind]] = gate_counts(build_gcd_circuit, range(2, 9))
        totals: list[int] = [counts[bits].total() for bits in range(2, 9)]

        assert totals == sorted(totals)

    @pytest.mark.parametrize("builder", (build_gcd_circuit, build_jacobi_circuit))
    def test_quadratic_fit(self, builder: "Callable[[int], ReversibleCircuit]") -> None:
        """Test that the counts for 3…8 bits fit C·n² & favour the quadratic model."""
        fit: ScalingFit = fit_scaling(
            {bits: len(builder(bits).gates) for bits in range(3, 9)}
        )

        assert fit.quadratic_r_squared >= 0.98
        assert fit.quadratic_dominates
        assert all(len(builder(bits).gates) <= fit.constant * bits**2 for bits in range(3, 9))

    @staticmethod
    def test_too_few_points_rejected() -> None:
        """Test that fitting fewer than three widths is refused."""
        with pytest.raises(InvalidRunConfigError, match="At least 3"):
            fit_scaling({3: 10, 4: 20})

    @staticmethod
    def test_csv_report() -> None:
        """Test that the CSV report has a header & one row per width."""
        rows: list[str] = scaling_report_csv(gate_counts(build_gcd_circuit, (2, 3))).splitlines()

        assert rows[0].startswith("n,total,NOT,CNOT")
        assert [row.split(",")[0] for row in rows[1:]] == ["2", "3"]
