"""
Reversible networks computing the binary GCD & the binary Jacobi symbol.

Both networks unroll a fixed 2n rounds. Each round writes its branch decisions into fresh
flag bits ("terminate or go on", "even or odd" & "comparison"), so no intermediate result
has to be measured or erased. The clean variants copy the result into a dedicated output
register & then run the whole computation backwards, returning every other bit to its
starting value.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "MINIMUM_BITS",
    "MAXIMUM_CONSTRUCTION_BITS",
    "build_gcd_circuit",
    "build_jacobi_circuit",
    "encode_jacobi_value",
)

import logging
from logging import Logger
from typing import Final

from exceptions import BitWidthOutOfRangeError, InvalidModulusError
from numtheory import JacobiValue, require_odd_modulus
from reversible.circuit import AncillaRole, RegisterLayout, ReversibleCircuit
from reversible.gates import Control, GateKind, ReversibleGate, x_gate

logger: Logger = logging.getLogger("gauss-squarefree")

MINIMUM_BITS: Final[int] = 2
MAXIMUM_CONSTRUCTION_BITS: Final[int] = 24


def _require_bit_width(bits: int) -> None:
    if not MINIMUM_BITS <= bits <= MAXIMUM_CONSTRUCTION_BITS:
        BIT_WIDTH_MESSAGE: Final[str] = (
            f"Bit width {bits} is outside the supported range "
            f"[{MINIMUM_BITS}, {MAXIMUM_CONSTRUCTION_BITS}]."
        )
        raise BitWidthOutOfRangeError(BIT_WIDTH_MESSAGE)


def encode_jacobi_value(value: JacobiValue, modulus: int) -> int:
    """Return the register encoding of a Jacobi symbol value, with -1 held as modulus - 1."""
    return value % modulus


class _NetworkBuilder:
    """Accumulates gates addressed by register name over a fixed layout."""

    def __init__(self, layout: RegisterLayout) -> None:
        self.layout: RegisterLayout = layout
        self.gates: list[ReversibleGate] = []

    def positive(self, register: str, index: int = 0) -> Control:
        return Control(self.layout.bit(register, index), positive=True)

    def negative(self, register: str, index: int = 0) -> Control:
        return Control(self.layout.bit(register, index), positive=False)

    def flip(self, register: str, index: int, *controls: Control) -> None:
        self.gates.append(x_gate(self.layout.bit(register, index), *controls))

    def flip_constant(self, register: str, constant: int, *controls: Control) -> None:
        """XOR a classical constant into the register under the given controls."""
        index: int
        for index in range(self.layout.register_width(register)):
            if constant >> index & 1:
                self.flip(register, index, *controls)

    def flag_nonzero(self, flag: str, index: int, register: str) -> None:
        """Set flag bit `index` to 1 exactly when the register is nonzero."""
        self.gates.append(
            x_gate(
                self.layout.bit(flag, index),
                *(Control(bit, positive=False) for bit in self.layout.bits(register)),
            )
        )
        self.flip(flag, index)

    def copy(self, source: str, target: str, *controls: Control) -> None:
        """XOR the source register bitwise into the target register."""
        source_bit: int
        target_bit: int
        for source_bit, target_bit in zip(
            self.layout.bits(source),
            self.layout.bits(target),
            strict=True,
        ):
            self.gates.append(x_gate(target_bit, Control(source_bit), *controls))

    def subtract(self, targets: tuple[int, ...], operand: str, *controls: Control) -> None:
        self.gates.append(
            ReversibleGate(
                kind=GateKind.MODULAR_SUBTRACT,
                targets=targets,
                controls=controls,
                operand=self.layout.bits(operand),
            )
        )

    def negate(self, register: str, *controls: Control) -> None:
        """Replace the register by its two's complement negation under the given controls."""
        index: int
        for index in range(self.layout.register_width(register)):
            self.flip(register, index, *controls)

        self.gates.append(
            ReversibleGate(
                kind=GateKind.MODULAR_ADD,
                targets=self.layout.bits(register),
                controls=controls,
                constant=1,
            )
        )

    def rotate(self, register: str, amount: int, *controls: Control) -> None:
        """Rotate the register right by `amount` places (left when negative)."""
        self.gates.append(
            ReversibleGate(
                kind=GateKind.CYCLIC_SHIFT,
                targets=self.layout.bits(register),
                controls=controls,
                amount=amount,
            )
        )

    def swap(self, first: str, second: str, *controls: Control) -> None:
        self.gates.append(
            ReversibleGate(
                kind=GateKind.CSWAP,
                targets=self.layout.bits(first),
                controls=controls,
                operand=self.layout.bits(second),
            )
        )

    def uncompute(self, computation: Sequence[ReversibleGate]) -> None:
        """Append the inverse of the given gates, in reverse order."""
        self.gates.extend(gate.inverse() for gate in reversed(computation))


def _gcd_round(builder: _NetworkBuilder, round_index: int) -> None:
    go_on: Control = builder.positive("terminate_or_go_on", round_index)
    odd: Control = builder.negative("even_or_odd", round_index)
    v_smaller: Control = builder.positive("comparison", round_index)

    builder.flag_nonzero("terminate_or_go_on", round_index, "v")
    builder.flip("even_or_odd", round_index, go_on, builder.negative("v"))

    builder.subtract(
        (*builder.layout.bits("v"), builder.layout.bit("comparison", round_index)),
        "u",
        go_on,
        odd,
    )
    builder.negate("v", v_smaller)
    builder.subtract(builder.layout.bits("u"), "v", v_smaller)

    builder.rotate("v", 1, go_on)


def build_gcd_circuit(bits: int, *, clean: bool = True) -> ReversibleCircuit:
    """
    Build the reversible binary GCD network for `bits`-bit operands u & v.

    On input u & v (every other register 0) the clean variant leaves gcd(u, v) in `out`
    & restores every other register. The history variant omits `out`, leaves the result in
    `r` & keeps every flag bit as garbage.
    """
    _require_bit_width(bits)

    ROUNDS: Final[int] = 2 * bits

    registers: list[tuple[str, int]] = [
        ("u", bits),
        ("v", bits),
        ("r", bits),
        ("terminate_or_go_on", ROUNDS),
        ("even_or_odd", ROUNDS),
        ("comparison", ROUNDS),
        ("common_twos", bits),
        ("orientation", 1),
    ]
    if clean:
        registers.append(("out", bits))

    builder: _NetworkBuilder = _NetworkBuilder(RegisterLayout.build(*registers))

    index: int
    for index in range(bits):
        both_even: Control = builder.positive("common_twos", index)
        builder.flip("common_twos", index, builder.negative("u"), builder.negative("v"))
        builder.rotate("u", 1, both_even)
        builder.rotate("v", 1, both_even)

    builder.flip("orientation", 0, builder.negative("u"))
    builder.swap("u", "v", builder.positive("orientation"))

    round_index: int
    for round_index in range(ROUNDS):
        _gcd_round(builder, round_index)

    builder.copy("u", "r")
    for index in range(bits):
        builder.rotate("r", -1, builder.positive("common_twos", index))

    roles: dict[str, AncillaRole]
    if clean:
        computation: list[ReversibleGate] = list(builder.gates)
        builder.copy("r", "out")
        builder.uncompute(computation)
        roles = {name: AncillaRole.CLEAN for name, _ in registers}
        roles |= {"u": AncillaRole.INPUT, "v": AncillaRole.INPUT, "out": AncillaRole.OUTPUT}
    else:
        roles = {name: AncillaRole.GARBAGE for name, _ in registers}
        roles["r"] = AncillaRole.OUTPUT

    circuit: ReversibleCircuit = ReversibleCircuit(
        name="gcd",
        layout=builder.layout,
        gates=tuple(builder.gates),
        roles=roles,
        output_register="out" if clean else "r",
        input_registers=("u", "v"),
        parameters={"bits": bits},
    )
    logger.debug(
        "Built %s GCD circuit for %d-bit operands: %d bits wide, %d gates",
        "clean" if clean else "history",
        bits,
        circuit.width,
        len(circuit.gates),
    )

    return circuit


def _jacobi_round(builder: _NetworkBuilder, round_index: int, modulus: int) -> None:
    bits: int = builder.layout.register_width("u")
    go_on: Control = builder.positive("terminate_or_go_on", round_index)
    odd: Control = builder.negative("even_or_odd", round_index)
    u_smaller: Control = builder.positive("comparison", round_index)

    builder.flag_nonzero("terminate_or_go_on", round_index, "u")
    builder.flip("even_or_odd", round_index, go_on, builder.negative("u"))

    builder.subtract(
        (*builder.layout.bits("u"), builder.layout.bit("comparison", round_index)),
        "v",
        go_on,
        odd,
    )

    # u & v are both 3 mod 4 exactly when v is 3 mod 4 & their difference is 0 mod 4
    builder.flip_constant(
        "r",
        modulus,
        u_smaller,
        builder.positive("v", 1),
        builder.negative("u", 1),
    )

    builder.negate("u", u_smaller)
    builder.subtract(builder.layout.bits("v"), "u", u_smaller)

    # v is odd here, so v is 3 or 5 mod 8 exactly when its two next-lowest bits differ
    if bits >= 3:
        builder.flip_constant(
            "r",
            modulus,
            go_on,
            builder.positive("v", 1),
            builder.negative("v", 2),
        )
        builder.flip_constant(
            "r",
            modulus,
            go_on,
            builder.negative("v", 1),
            builder.positive("v", 2),
        )
    else:
        builder.flip_constant("r", modulus, go_on, builder.positive("v", 1))

    builder.rotate("u", 1, go_on)


def build_jacobi_circuit(bits: int, modulus: int | None = None, *, clean: bool = True) -> ReversibleCircuit:  # noqa: E501
    """
    Build the reversible binary Jacobi network for `bits`-bit inputs & a fixed odd modulus.

    The modulus is a classical constant loaded into `v` by the circuit itself & defaults to
    2**bits - 1. The sign register `r` holds 1 or modulus - 1 & each sign change XORs it with
    the modulus, which swaps those two encodings. The clean variant copies `r` into `out`
    only when the final `v` is 1 (input coprime to the modulus), so `out` holds 0 otherwise.
    """
    _require_bit_width(bits)

    if modulus is None:
        modulus = (1 << bits) - 1

    require_odd_modulus(modulus)
    if modulus >= 1 << bits:
        MODULUS_TOO_WIDE_MESSAGE: Final[str] = (
            f"Modulus {modulus} does not fit in {bits} bits."
        )
        raise InvalidModulusError(MODULUS_TOO_WIDE_MESSAGE, modulus=modulus)

    ROUNDS: Final[int] = 2 * bits

    registers: list[tuple[str, int]] = [
        ("u", bits),
        ("v", bits),
        ("r", bits),
        ("terminate_or_go_on", ROUNDS),
        ("even_or_odd", ROUNDS),
        ("comparison", ROUNDS),
        ("coprime", 1),
    ]
    if clean:
        registers.append(("out", bits))

    builder: _NetworkBuilder = _NetworkBuilder(RegisterLayout.build(*registers))

    builder.flip_constant("v", modulus)
    builder.flip("r", 0)

    round_index: int
    for round_index in range(ROUNDS):
        _jacobi_round(builder, round_index, modulus)

    builder.flip(
        "coprime",
        0,
        builder.positive("v", 0),
        *(builder.negative("v", index) for index in range(1, bits)),
    )

    roles: dict[str, AncillaRole]
    if clean:
        computation: list[ReversibleGate] = list(builder.gates)
        builder.copy("r", "out", builder.positive("coprime"))
        builder.uncompute(computation)
        roles = {name: AncillaRole.CLEAN for name, _ in registers}
        roles |= {"u": AncillaRole.INPUT, "out": AncillaRole.OUTPUT}
    else:
        roles = {name: AncillaRole.GARBAGE for name, _ in registers}
        roles["r"] = AncillaRole.OUTPUT

    circuit: ReversibleCircuit = ReversibleCircuit(
        name="jacobi",
        layout=builder.layout,
        gates=tuple(builder.gates),
        roles=roles,
        output_register="out" if clean else "r",
        input_registers=("u",),
        parameters={"bits": bits, "modulus": modulus},
    )
    logger.debug(
        "Built %s Jacobi circuit for %d-bit inputs modulo %d: %d bits wide, %d gates",
        "clean" if clean else "history",
        bits,
        modulus,
        circuit.width,
        len(circuit.gates),
    )

    return circuit
