"""Named register layouts & the reversible circuits built over them."""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "AncillaRole",
    "RegisterLayout",
    "ReversibleCircuit",
    "circuit_inverse",
    "from_netlist",
    "gate_count",
    "to_netlist",
)

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Final, Self

from exceptions import MalformedGateError
from reversible.gates import GateKind, ReversibleGate


class AncillaRole(StrEnum):
    """What a register is expected to hold once a circuit has run."""

    INPUT = "input"  # loaded with an operand & restored by the end
    OUTPUT = "output"
    CLEAN = "clean"
    GARBAGE = "garbage"


@dataclass(frozen=True, slots=True)
class RegisterLayout:
    """An ordered assignment of named registers to consecutive circuit bits."""

    registers: tuple[tuple[str, int], ...]
    _offsets: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Check that register names are unique & widths positive, then index the offsets."""
        offsets: dict[str, int] = {}
        offset: int = 0

        name: str
        width: int
        for name, width in self.registers:
            if name in offsets or width < 1:
                INVALID_REGISTER_MESSAGE: Final[str] = (
                    f"Register {name!r} is duplicated or has non-positive width {width}."
                )
                raise MalformedGateError(INVALID_REGISTER_MESSAGE)
            offsets[name] = offset
            offset += width

        object.__setattr__(self, "_offsets", offsets)

    @classmethod
    def build(cls, *registers: tuple[str, int]) -> Self:
        """Build a layout from (name, width) pairs in bit order."""
        return cls(registers=tuple(registers))

    @property
    def width(self) -> int:
        """The total number of bits across every register."""
        return sum(width for _, width in self.registers)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.registers)

    def register_width(self, name: str) -> int:
        """Return the number of bits of the named register."""
        return dict(self.registers)[name]

    def bits(self, name: str) -> tuple[int, ...]:
        """Return the circuit bits of the named register, least significant first."""
        if name not in self._offsets:
            UNKNOWN_REGISTER_MESSAGE: Final[str] = f"Unknown register {name!r}."
            raise KeyError(UNKNOWN_REGISTER_MESSAGE)

        offset: int = self._offsets[name]
        return tuple(range(offset, offset + self.register_width(name)))

    def bit(self, name: str, index: int) -> int:
        """Return the circuit bit holding bit `index` of the named register."""
        return self.bits(name)[index]


@dataclass(frozen=True, slots=True, eq=False)
class ReversibleCircuit:
    """
    A reversible circuit: a register layout, a gate sequence & each register's ancilla role.

    `input_registers` are loaded with the operands before the circuit runs & every other
    register starts at 0. `output_register` names the register holding the computed result.
    """

    name: str
    layout: RegisterLayout
    gates: tuple[ReversibleGate, ...]
    roles: Mapping[str, AncillaRole]
    output_register: str
    input_registers: tuple[str, ...] = ()
    parameters: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Check that every register has a role & that no gate addresses a missing bit."""
        if set(self.roles) != set(self.layout.names):
            MISSING_ROLES_MESSAGE: Final[str] = (
                f"Circuit {self.name!r} must give every register exactly one ancilla role."
            )
            raise MalformedGateError(MISSING_ROLES_MESSAGE)

        if self.output_register not in self.roles or not set(self.input_registers) <= set(self.roles):  # noqa: E501
            UNKNOWN_OUTPUT_MESSAGE: Final[str] = (
                f"Circuit {self.name!r} declares an output or input register "
                "missing from its layout."
            )
            raise MalformedGateError(UNKNOWN_OUTPUT_MESSAGE)

        width: int = self.layout.width

        gate: ReversibleGate
        for gate in self.gates:
            if gate.support and gate.support[-1] >= width:
                OUT_OF_RANGE_MESSAGE: Final[str] = (
                    f"Gate {gate.to_netlist_line()!r} addresses a bit outside "
                    f"the {width}-bit circuit {self.name!r}."
                )
                raise MalformedGateError(OUT_OF_RANGE_MESSAGE)

    @property
    def width(self) -> int:
        """The total number of bits the circuit acts on."""
        return self.layout.width

    def registers_with_role(self, role: AncillaRole) -> tuple[str, ...]:
        """Return the names of every register with the given ancilla role, in bit order."""
        return tuple(name for name in self.layout.names if self.roles[name] == role)


def gate_count(circuit: ReversibleCircuit) -> Counter[GateKind]:
    """Return the number of gates of each kind in the circuit."""
    return Counter(gate.kind for gate in circuit.gates)


def circuit_inverse(circuit: ReversibleCircuit) -> ReversibleCircuit:
    """
    Return the circuit that undoes the given one.

    The layout & register roles are kept, so the roles describe the forward direction.
    """
    return ReversibleCircuit(
        name=f"{circuit.name}_inverse",
        layout=circuit.layout,
        gates=tuple(gate.inverse() for gate in reversed(circuit.gates)),
        roles=circuit.roles,
        output_register=circuit.output_register,
        input_registers=circuit.input_registers,
        parameters=circuit.parameters,
    )


def to_netlist(circuit: ReversibleCircuit) -> str:
    """Render the circuit as a line-oriented text netlist."""
    lines: list[str] = [f"circuit {circuit.name}"]

    lines.extend(
        f"parameter {parameter} {value}" for parameter, value in circuit.parameters.items()
    )
    lines.extend(
        f"register {name} {width} {circuit.roles[name]}"
        for name, width in circuit.layout.registers
    )
    lines.append(f"output {circuit.output_register}")
    if circuit.input_registers:
        lines.append(f"input {' '.join(circuit.input_registers)}")
    lines.extend(gate.to_netlist_line() for gate in circuit.gates)

    return "\n".join(lines) + "\n"


def from_netlist(netlist: str | Iterable[str]) -> ReversibleCircuit:  # noqa: C901
    """Parse a text netlist produced by `to_netlist()` back into a circuit."""
    lines: Iterable[str] = netlist.splitlines() if isinstance(netlist, str) else netlist

    name: str | None = None
    output_register: str | None = None
    input_registers: tuple[str, ...] = ()
    registers: list[tuple[str, int]] = []
    roles: dict[str, AncillaRole] = {}
    parameters: dict[str, int] = {}
    gates: list[ReversibleGate] = []

    raw_line: str
    for raw_line in lines:
        line: str = raw_line.strip()
        if not line or line.startswith("#"):
            continue

        fields: list[str] = line.split()

        try:
            match fields:
                case ["circuit", circuit_name]:
                    name = circuit_name
                case ["parameter", parameter, value]:
                    parameters[parameter] = int(value)
                case ["register", register_name, width, role]:
                    registers.append((register_name, int(width)))
                    roles[register_name] = AncillaRole(role)
                case ["output", register_name]:
                    output_register = register_name
                case ["input", *input_names] if input_names:
                    input_registers = tuple(input_names)
                case ["gate", *_]:
                    gates.append(ReversibleGate.from_netlist_line(line))
                case _:
                    UNKNOWN_LINE_MESSAGE: Final[str] = f"Unrecognised netlist line {line!r}."
                    raise MalformedGateError(UNKNOWN_LINE_MESSAGE)
        except MalformedGateError:
            raise
        except ValueError as e:
            INVALID_LINE_MESSAGE: Final[str] = f"Invalid netlist line {line!r}."
            raise MalformedGateError(INVALID_LINE_MESSAGE) from e

    if name is None or output_register is None:
        INCOMPLETE_NETLIST_MESSAGE: Final[str] = (
            "Netlist must declare both a circuit name & an output register."
        )
        raise MalformedGateError(INCOMPLETE_NETLIST_MESSAGE)

    return ReversibleCircuit(
        name=name,
        layout=RegisterLayout(registers=tuple(registers)),
        gates=tuple(gates),
        roles=roles,
        output_register=output_register,
        input_registers=input_registers,
        parameters=parameters,
    )
