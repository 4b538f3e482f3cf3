"""
The reversible gate model.

Every gate is a bijection on computational basis states, applied in place to a matrix of
bits with one row per basis branch & one column per circuit bit (bit 0 of a register is its
least significant bit).
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "GateKind",
    "Control",
    "ReversibleGate",
    "x_gate",
    "bits_to_values",
    "values_to_bits",
)

from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING, Final, Self

import numpy as np

from exceptions import MalformedGateError

if TYPE_CHECKING:
    import numpy.typing as npt

MAXIMUM_ARITHMETIC_BITS: Final[int] = 62


class GateKind(StrEnum):
    """The kinds of reversible gate the engine can apply."""

    NOT = "NOT"
    CNOT = "CNOT"
    TOFFOLI = "TOFFOLI"
    MCX = "MCX"
    CSWAP = "CSWAP"
    CYCLIC_SHIFT = "CYCLIC_SHIFT"
    MODULAR_ADD = "MODULAR_ADD"
    MODULAR_SUBTRACT = "MODULAR_SUBTRACT"


_X_KINDS: Final[frozenset[GateKind]] = frozenset(
    {GateKind.NOT, GateKind.CNOT, GateKind.TOFFOLI, GateKind.MCX}
)
_ARITHMETIC_KINDS: Final[frozenset[GateKind]] = frozenset(
    {GateKind.MODULAR_ADD, GateKind.MODULAR_SUBTRACT}
)


@dataclass(frozen=True, slots=True)
class Control:
    """A control bit that enables a gate when it holds 1, or holds 0 for negative polarity."""

    bit: int
    positive: bool = True

    def __str__(self) -> str:
        """Render this control in netlist notation, e.g. `12+` or `3-`."""
        return f"{self.bit}{'+' if self.positive else '-'}"

    @classmethod
    def parse(cls, token: str) -> Self:
        """Parse a control from netlist notation."""
        if len(token) < 2 or token[-1] not in "+-" or not token[:-1].isdigit():
            INVALID_CONTROL_MESSAGE: Final[str] = f"Invalid control token {token!r}."
            raise MalformedGateError(INVALID_CONTROL_MESSAGE)

        return cls(bit=int(token[:-1]), positive=token[-1] == "+")


@dataclass(frozen=True, slots=True)
class ReversibleGate:
    """
    One reversible gate.

    `targets` are the bits the gate changes. `operand` is the second bit group for
    controlled swaps & the source register of register-to-register additions. Constant
    additions use `constant` & cyclic shifts rotate the targets right by `amount` places.
    """

    kind: GateKind
    targets: tuple[int, ...]
    controls: tuple[Control, ...] = ()
    operand: tuple[int, ...] = ()
    constant: int | None = None
    amount: int = 0

    def __post_init__(self) -> None:
        """Reject gates whose bit addressing is inconsistent."""
        self._validate()

    def _validate(self) -> None:  # noqa: C901
        problem: str | None = None
        control_bits: tuple[int, ...] = tuple(control.bit for control in self.controls)
        every_bit: tuple[int, ...] = (*control_bits, *self.targets, *self.operand)

        if not self.targets:
            problem = "has no target bits"
        elif any(bit < 0 for bit in every_bit):
            problem = "addresses a negative bit"
        elif len(set(every_bit)) != len(every_bit):
            problem = "reuses a bit between or within its controls, targets & operand"
        elif self.kind in _X_KINDS and len(self.targets) != 1:
            problem = "must have exactly one target bit"
        elif self.kind in _X_KINDS and self.operand:
            problem = "cannot have an operand"
        elif self.kind == GateKind.CSWAP and len(self.operand) != len(self.targets):
            problem = "must swap two bit groups of equal width"
        elif self.kind == GateKind.CYCLIC_SHIFT and self.operand:
            problem = "cannot have an operand"
        elif self.kind in _ARITHMETIC_KINDS and bool(self.operand) == (self.constant is not None):  # noqa: E501
            problem = "needs exactly one of an operand register or a constant"
        elif self.kind in _ARITHMETIC_KINDS and len(self.targets) > MAXIMUM_ARITHMETIC_BITS:
            problem = f"has more than {MAXIMUM_ARITHMETIC_BITS} target bits"
        elif self.kind not in _ARITHMETIC_KINDS and self.constant is not None:
            problem = "cannot have a constant"
        elif self.kind != GateKind.CYCLIC_SHIFT and self.amount:
            problem = "cannot have a shift amount"

        if problem is not None:
            MALFORMED_GATE_MESSAGE: Final[str] = f"{self.kind} gate {problem}."
            raise MalformedGateError(MALFORMED_GATE_MESSAGE)

    @property
    def support(self) -> tuple[int, ...]:
        """Every bit this gate reads or writes, in increasing order."""
        return tuple(
            sorted({control.bit for control in self.controls} | {*self.targets, *self.operand})
        )

    def inverse(self) -> "ReversibleGate":
        """Return the gate that undoes this one."""
        match self.kind:
            case GateKind.CYCLIC_SHIFT:
                return ReversibleGate(
                    kind=self.kind,
                    targets=self.targets,
                    controls=self.controls,
                    amount=-self.amount,
                )
            case GateKind.MODULAR_ADD | GateKind.MODULAR_SUBTRACT:
                return ReversibleGate(
                    kind=(
                        GateKind.MODULAR_SUBTRACT
                        if self.kind == GateKind.MODULAR_ADD
                        else GateKind.MODULAR_ADD
                    ),
                    targets=self.targets,
                    controls=self.controls,
                    operand=self.operand,
                    constant=self.constant,
                )
            case _:
                return self

    def remapped(self, mapping: dict[int, int]) -> "ReversibleGate":
        """Return this gate with every bit address translated through the mapping."""
        return ReversibleGate(
            kind=self.kind,
            targets=tuple(mapping[bit] for bit in self.targets),
            controls=tuple(
                Control(mapping[control.bit], control.positive) for control in self.controls
            ),
            operand=tuple(mapping[bit] for bit in self.operand),
            constant=self.constant,
            amount=self.amount,
        )

    def enabled(self, bits: "npt.NDArray[np.uint8]") -> "npt.NDArray[np.bool_]":
        """Return which rows of the bit matrix satisfy every control of this gate."""
        mask: npt.NDArray[np.bool_] = np.ones(bits.shape[0], dtype=np.bool_)

        control: Control
        for control in self.controls:
            mask &= bits[:, control.bit] == (1 if control.positive else 0)

        return mask

    def apply(self, bits: "npt.NDArray[np.uint8]") -> None:
        """Apply this gate in place to every row of the bit matrix."""
        rows: npt.NDArray[np.intp] = np.flatnonzero(self.enabled(bits))
        if rows.size == 0:
            return

        targets: list[int] = list(self.targets)

        match self.kind:
            case GateKind.NOT | GateKind.CNOT | GateKind.TOFFOLI | GateKind.MCX:
                bits[rows, targets[0]] ^= 1

            case GateKind.CSWAP:
                operand: list[int] = list(self.operand)
                swapped: npt.NDArray[np.uint8] = bits[np.ix_(rows, targets)].copy()
                bits[np.ix_(rows, targets)] = bits[np.ix_(rows, operand)]
                bits[np.ix_(rows, operand)] = swapped

            case GateKind.CYCLIC_SHIFT:
                bits[np.ix_(rows, targets)] = np.roll(
                    bits[np.ix_(rows, targets)],
                    -self.amount,
                    axis=1,
                )

            case GateKind.MODULAR_ADD | GateKind.MODULAR_SUBTRACT:
                target_values: npt.NDArray[np.int64] = bits_to_values(
                    bits[np.ix_(rows, targets)]
                )
                addend: npt.NDArray[np.int64] | int = (
                    self.constant
                    if self.constant is not None
                    else bits_to_values(bits[np.ix_(rows, list(self.operand))])
                )
                modulus_mask: int = (1 << len(targets)) - 1
                result: npt.NDArray[np.int64] = (
                    target_values + addend
                    if self.kind == GateKind.MODULAR_ADD
                    else target_values - addend
                ) & modulus_mask
                bits[np.ix_(rows, targets)] = values_to_bits(result, len(targets))

    def to_netlist_line(self) -> str:
        """Render this gate as one netlist line."""
        fields: list[str] = [f"gate {self.kind}"]

        if self.controls:
            fields.append(f"controls={','.join(str(control) for control in self.controls)}")
        fields.append(f"targets={','.join(str(bit) for bit in self.targets)}")
        if self.operand:
            fields.append(f"operand={','.join(str(bit) for bit in self.operand)}")
        if self.constant is not None:
            fields.append(f"constant={self.constant}")
        if self.amount:
            fields.append(f"amount={self.amount}")

        return " ".join(fields)

    @classmethod
    def from_netlist_line(cls, line: str) -> Self:
        """Parse one netlist gate line."""
        tokens: list[str] = line.split()
        if len(tokens) < 3 or tokens[0] != "gate" or tokens[1] not in GateKind.__members__:
            INVALID_GATE_LINE_MESSAGE: Final[str] = f"Invalid netlist gate line {line!r}."
            raise MalformedGateError(INVALID_GATE_LINE_MESSAGE)

        fields: dict[str, str] = {}

        token: str
        for token in tokens[2:]:
            key: str
            _: str
            value: str
            key, _, value = token.partition("=")
            if not value or key in fields:
                INVALID_GATE_FIELD_MESSAGE: Final[str] = (
                    f"Invalid netlist gate field {token!r}."
                )
                raise MalformedGateError(INVALID_GATE_FIELD_MESSAGE)
            fields[key] = value

        unknown_fields: set[str] = set(fields) - {
            "controls",
            "targets",
            "operand",
            "constant",
            "amount",
        }
        if unknown_fields:
            UNKNOWN_FIELD_MESSAGE: Final[str] = (
                f"Unknown netlist gate fields {sorted(unknown_fields)!r} in {line!r}."
            )
            raise MalformedGateError(UNKNOWN_FIELD_MESSAGE)

        controls: tuple[Control, ...] = tuple(
            Control.parse(control) for control in fields.get("controls", "").split(",") if control
        )

        try:
            targets: tuple[int, ...] = _parse_bits(fields.get("targets", ""))
            operand: tuple[int, ...] = _parse_bits(fields.get("operand", ""))
            constant: int | None = int(fields["constant"]) if "constant" in fields else None
            amount: int = int(fields.get("amount", "0"))
        except ValueError as e:
            UNPARSABLE_NUMBER_MESSAGE: Final[str] = (
                f"Netlist gate line {line!r} contains a non-integer bit address or value."
            )
            raise MalformedGateError(UNPARSABLE_NUMBER_MESSAGE) from e

        return cls(
            kind=GateKind(tokens[1]),
            targets=targets,
            controls=controls,
            operand=operand,
            constant=constant,
            amount=amount,
        )


def _parse_bits(raw_bits: str) -> tuple[int, ...]:
    return tuple(int(bit) for bit in raw_bits.split(",") if bit)


def x_gate(target: int, *controls: Control) -> ReversibleGate:
    """Return the NOT-family gate with the given target & controls, named by control count."""
    kind: GateKind = (
        GateKind.NOT,
        GateKind.CNOT,
        GateKind.TOFFOLI,
    )[len(controls)] if len(controls) < 3 else GateKind.MCX

    return ReversibleGate(kind=kind, targets=(target,), controls=tuple(controls))


def bits_to_values(bits: "npt.NDArray[np.uint8]") -> "npt.NDArray[np.int64]":
    """Read each row of a little-endian bit matrix as a non-negative integer."""
    weights: npt.NDArray[np.int64] = np.left_shift(
        np.int64(1), np.arange(bits.shape[1], dtype=np.int64)
    )
    return bits.astype(np.int64) @ weights


def values_to_bits(values: "npt.NDArray[np.int64]", width: int) -> "npt.NDArray[np.uint8]":
    """Write each integer as one little-endian row of `width` bits."""
    return (
        (values[:, np.newaxis] >> np.arange(width, dtype=np.int64)) & 1
    ).astype(np.uint8)
