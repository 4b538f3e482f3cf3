"""Contains command classes for building & verifying the reversible GCD & Jacobi networks."""

from collections.abc import Sequence

__all__: Sequence[str] = ("CircuitCommand",)

import argparse
from collections import Counter
from pathlib import Path
from typing import TYPE_CHECKING, Final

from exceptions import InvalidRunConfigError
from reversible import (
    MAXIMUM_CONSTRUCTION_BITS,
    MINIMUM_BITS,
    GateKind,
    ReversibleCircuit,
    build_gcd_circuit,
    build_jacobi_circuit,
    check_circuit,
    gate_count,
    to_netlist,
)
from utils import BaseCommand, CommandChecks, FileOutputSender, capture_domain_error

if TYPE_CHECKING:
    from utils import RunConfig


class CircuitCommand(BaseCommand):
    """Command class that defines the "circuit" command and its run method."""

    NAME = "circuit"
    HELP = "Build the reversible GCD or Jacobi network for n-bit operands."

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("kind", choices=("gcd", "jacobi"))
        parser.add_argument(
            "--bits",
            type=CommandChecks.bounded(MINIMUM_BITS, MAXIMUM_CONSTRUCTION_BITS),
            required=True,
            help="bit width n of the operands",
        )
        parser.add_argument(
            "--verify",
            action="store_true",
            help="check the network against its classical oracle, roles & bijectivity",
        )
        parser.add_argument(
            "--modulus",
            dest="circuit_modulus",
            type=CommandChecks.odd_modulus,
            help="odd modulus of the Jacobi network (default: 2**n - 1)",
        )
        parser.add_argument("--netlist", type=Path, help="also write the netlist to this file")
        parser.add_argument(
            "--clean",
            action=argparse.BooleanOptionalAction,
            help="copy the result out & uncompute the garbage (default: true)",
        )

    @staticmethod
    def _build(config: "RunConfig") -> ReversibleCircuit:
        bits: int = config.require_operand("bits")

        if config.kind == "jacobi":
            return build_jacobi_circuit(bits, config.circuit_modulus, clean=config.clean)

        if config.circuit_modulus is not None:
            GCD_MODULUS_MESSAGE: Final[str] = "The GCD network takes no --modulus."
            raise InvalidRunConfigError(GCD_MODULUS_MESSAGE)

        return build_gcd_circuit(bits, clean=config.clean)

    @capture_domain_error
    def run(self, config: "RunConfig") -> str | None:
        """Definition & run method of the "circuit" command."""
        circuit: ReversibleCircuit = self._build(config)

        if config.netlist is not None:
            FileOutputSender(config.netlist).send(to_netlist(circuit))

        counts: Counter[GateKind] = gate_count(circuit)

        payload: dict[str, object] = {
            "circuit": circuit.name,
            "parameters": dict(circuit.parameters),
            "clean": config.clean,
            "width": circuit.width,
            "registers": [
                {"name": name, "width": width, "role": circuit.roles[name].value}
                for name, width in circuit.layout.registers
            ],
            "gates": len(circuit.gates),
            "gate_counts": {kind.value: counts[kind] for kind in GateKind},
        }
        if config.verify:
            payload["verification"] = check_circuit(circuit, seed=config.seed).to_dict()

        return self.render(
            config,
            payload=payload,
            table="kind,count\n" + "".join(f"{kind.value},{counts[kind]}\n" for kind in GateKind),
        )
