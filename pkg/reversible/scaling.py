"""Gate-count scaling of the binary networks with the operand bit width."""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "ScalingFit",
    "fit_scaling",
    "gate_counts",
    "scaling_report_csv",
)

import csv
import io
from collections import Counter
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
from typing import TYPE_CHECKING, Final

import numpy as np

from exceptions import InvalidRunConfigError
from reversible.circuit import ReversibleCircuit, gate_count
from reversible.gates import GateKind

if TYPE_CHECKING:
    import numpy.typing as npt

_MINIMUM_FIT_POINTS: Final[int] = 3


@dataclass(frozen=True, slots=True)
class ScalingFit:
    """
    Least-squares fits of total gate count against bit width.

    `constant` is the smallest C with count(n) ≤ C·n² over every measured width.
    """

    quadratic_coefficients: tuple[float, float, float]
    linear_coefficients: tuple[float, float]
    quadratic_r_squared: float
    linear_r_squared: float
    constant: float

    @property
    def quadratic_dominates(self) -> bool:
        """Whether the quadratic model explains the counts at least as well as the linear."""
        return self.quadratic_r_squared >= self.linear_r_squared

    def to_dict(self) -> dict[str, object]:
        return {
            "quadratic_coefficients": list(self.quadratic_coefficients),
            "linear_coefficients": list(self.linear_coefficients),
            "quadratic_r_squared": self.quadratic_r_squared,
            "linear_r_squared": self.linear_r_squared,
            "constant": self.constant,
        }


def _r_squared(observed: "npt.NDArray[np.float64]", predicted: "npt.NDArray[np.float64]") -> float:  # noqa: E501
    residual: float = float(np.sum((observed - predicted) ** 2))
    total: float = float(np.sum((observed - observed.mean()) ** 2))

    return 1.0 if total == 0 else 1 - residual / total


def fit_scaling(totals: Mapping[int, int]) -> ScalingFit:
    """Fit total gate counts keyed by bit width with quadratic & linear polynomials."""
    if len(totals) < _MINIMUM_FIT_POINTS:
        TOO_FEW_POINTS_MESSAGE: Final[str] = (
            f"At least {_MINIMUM_FIT_POINTS} bit widths are needed to fit gate-count scaling."
        )
        raise InvalidRunConfigError(TOO_FEW_POINTS_MESSAGE)

    widths: npt.NDArray[np.float64] = np.array(sorted(totals), dtype=np.float64)
    counts: npt.NDArray[np.float64] = np.array(
        [totals[width] for width in sorted(totals)],
        dtype=np.float64,
    )

    quadratic: npt.NDArray[np.float64] = np.polyfit(widths, counts, 2)
    linear: npt.NDArray[np.float64] = np.polyfit(widths, counts, 1)

    return ScalingFit(
        quadratic_coefficients=(float(quadratic[0]), float(quadratic[1]), float(quadratic[2])),  # noqa: E501
        linear_coefficients=(float(linear[0]), float(linear[1])),
        quadratic_r_squared=_r_squared(counts, np.polyval(quadratic, widths)),
        linear_r_squared=_r_squared(counts, np.polyval(linear, widths)),
        constant=float(np.max(counts / widths**2)),
    )


def gate_counts(builder: Callable[[int], ReversibleCircuit], widths: Iterable[int]) -> dict[int, Counter[GateKind]]:  # noqa: E501
    """Return the per-kind gate counts of the circuit built at each bit width."""
    return {width: gate_count(builder(width)) for width in widths}


def scaling_report_csv(counts: Mapping[int, Counter[GateKind]]) -> str:
    """Serialise gate counts with the columns n, total & one column per gate kind."""
    output: io.StringIO = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(("n", "total", *(kind.value for kind in GateKind)))

    width: int
    by_kind: Counter[GateKind]
    for width, by_kind in sorted(counts.items()):
        writer.writerow((width, by_kind.total(), *(by_kind[kind] for kind in GateKind)))

    return output.getvalue()
