"""Contains command classes for the desk-scale verification sweeps."""

from collections.abc import Sequence

__all__: Sequence[str] = ("SweepCommand",)

import csv
import io
import logging
from collections.abc import Callable, Mapping
from logging import Logger
from typing import TYPE_CHECKING, Final, TypeAlias

from config import settings
from driver import decompose, explore_all_traces
from gauss import GaussSumMethod, verify_closed_form, verify_dichotomy, verify_reduction
from numtheory import squarefree_oracle
from qsim import OmegaMode
from reversible import (
    MAXIMUM_CONSTRUCTION_BITS,
    MINIMUM_BITS,
    build_gcd_circuit,
    build_jacobi_circuit,
    check_circuit,
    fit_scaling,
)
from utils import BaseCommand, CommandChecks, capture_domain_error, format_real

if TYPE_CHECKING:
    import argparse

    from gauss import DichotomyReport
    from numtheory import SquareFreeDecomposition
    from reversible import CircuitReport, ReversibleCircuit, ScalingFit
    from utils import RunConfig

logger: Logger = logging.getLogger("gauss-squarefree")

DEFAULT_MAX_N: Final[Mapping[str, int]] = {"dichotomy": 2000, "decompose": 2000}
DEFAULT_MAX_BITS: Final[int] = 6
SCALING_WIDTHS: Final[range] = range(3, 9)
IDENTITY_TOLERANCE: Final[float] = 1e-6

SweepRow: TypeAlias = dict[str, object]


def _dichotomy_rows(max_n: int, method: GaussSumMethod) -> list[SweepRow]:
    rows: list[SweepRow] = []

    modulus: int
    for modulus in range(3, max_n + 1, 2):
        report: DichotomyReport = verify_dichotomy(modulus, method)
        identity_defect: float = (
            verify_closed_form(modulus)
            if report.square_free
            else verify_reduction(modulus).max_deviation
        )

        rows.append(
            {
                "N": modulus,
                "square_free": report.square_free,
                "max_violation": report.max_violation,
                "identity_defect": identity_defect,
                "passed": report.passed() and identity_defect < IDENTITY_TOLERANCE,
            }
        )

    return rows


def _decompose_rows(max_n: int, seeds: int) -> list[SweepRow]:
    exhaustive_limit: int = settings["EXHAUSTIVE_LIMIT"]
    rows: list[SweepRow] = []

    modulus: int
    for modulus in range(3, max_n + 1, 2):
        expected: SquareFreeDecomposition = squarefree_oracle(modulus)

        results: set[SquareFreeDecomposition]
        if modulus <= exhaustive_limit:
            results = {explore_all_traces(modulus).decomposition}
        else:
            results = {
                decompose(modulus, OmegaMode.SAMPLE, seed)[0] for seed in range(seeds)
            }

        rows.append(
            {
                "N": modulus,
                "r": expected.r,
                "s": expected.s,
                "method": "exhaustive" if modulus <= exhaustive_limit else "sampled",
                "passed": results == {expected},
            }
        )

    return rows


def _circuit_rows(max_bits: int, seed: int) -> list[SweepRow]:
    builders: Mapping[str, Callable[[int], ReversibleCircuit]] = {
        "gcd": build_gcd_circuit,
        "jacobi": build_jacobi_circuit,
    }
    rows: list[SweepRow] = []

    name: str
    builder: Callable[[int], ReversibleCircuit]
    for name, builder in builders.items():
        bits: int
        for bits in range(MINIMUM_BITS, max_bits + 1):
            report: CircuitReport = check_circuit(builder(bits), seed=seed)
            rows.append(
                {
                    "circuit": name,
                    "bits": bits,
                    "width": report.width,
                    "gates": sum(report.gate_counts.values()),
                    "oracle_match": report.oracle_match,
                    "ancilla_contract": report.ancilla_contract,
                    "permutation": report.permutation,
                    "passed": report.passed,
                }
            )

    return rows


def _scaling_fits() -> dict[str, object]:
    fits: dict[str, object] = {}

    name: str
    builder: Callable[[int], ReversibleCircuit]
    for name, builder in (("gcd", build_gcd_circuit), ("jacobi", build_jacobi_circuit)):
        fit: ScalingFit = fit_scaling(
            {bits: len(builder(bits).gates) for bits in SCALING_WIDTHS}
        )
        fits[name] = fit.to_dict()

    return fits


def _rows_csv(rows: Sequence[SweepRow]) -> str:
    if not rows:
        return ""

    output: io.StringIO = io.StringIO()

    writer = csv.DictWriter(output, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(
        {
            key: format_real(value) if isinstance(value, float) else value
            for key, value in row.items()
        }
        for row in rows
    )

    return output.getvalue()


class SweepCommand(BaseCommand):
    """Command class that defines the "sweep" command and its run method."""

    NAME = "sweep"
    HELP = "Check the Gauss-sum identities, the decomposition or the circuits over a range."

    @classmethod
    def add_arguments(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument("target", choices=("dichotomy", "decompose", "circuits"))
        parser.add_argument(
            "--max-n",
            type=CommandChecks.positive,
            help="largest odd N swept (default: 2000)",
        )
        parser.add_argument(
            "--max-bits",
            type=CommandChecks.bounded(MINIMUM_BITS, MAXIMUM_CONSTRUCTION_BITS),
            help=f"widest circuit checked (default: {DEFAULT_MAX_BITS})",
        )
        parser.add_argument(
            "--seeds",
            type=CommandChecks.positive,
            default=100,
            help="seeds per N above the exhaustive limit",
        )
        parser.add_argument(
            "--method",
            type=GaussSumMethod,
            choices=tuple(GaussSumMethod),
            default=GaussSumMethod.DIRECT,
        )

    @capture_domain_error
    def run(self, config: "RunConfig") -> str | None:
        """Definition & run method of the "sweep" command."""
        target: str = config.target or "dichotomy"
        payload: dict[str, object] = {"target": target}

        rows: list[SweepRow]
        if target == "circuits":
            rows = _circuit_rows(config.max_bits or DEFAULT_MAX_BITS, config.seed)
            payload["scaling"] = _scaling_fits()
        elif target == "decompose":
            rows = _decompose_rows(config.max_n or DEFAULT_MAX_N[target], config.seeds)
        else:
            rows = _dichotomy_rows(
                config.max_n or DEFAULT_MAX_N[target],
                GaussSumMethod(config.method),
            )

        failures: list[SweepRow] = [row for row in rows if not row["passed"]]
        if failures:
            logger.warning("%d of %d %s checks failed", len(failures), len(rows), target)

        payload |= {"checked": len(rows), "failed": len(failures), "rows": rows}

        return self.render(
            config,
            text=f"{target}: {len(rows)} checked, {len(failures)} failed",
            payload=payload,
            table=_rows_csv(rows),
        )
