"""
Probability bounds on how many Ω runs the decomposition needs, & their empirical check.

One run of Ω on N reveals the square part (or certifies N square-free) with probability at
least p = (φ(N)/N)², so k independent runs all fail with probability at most (1 - p)^k.
Replacing φ(N)/N by the lower bound 1/(2·ln ln N) gives the looser closed-form bound.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "EULER_MASCHERONI",
    "SIMPLIFIED_BOUND_MINIMUM",
    "BoundReport",
    "bound_report_csv",
    "empirical_failure_rates",
    "iteration_bound",
    "iterations_for_confidence",
    "phi_lower_bound",
)

import csv
import io
import math
from collections.abc import Iterable
from dataclasses import dataclass
from typing import TYPE_CHECKING, Final

import numpy as np

from exceptions import InvalidModulusError, InvalidRunConfigError
from numtheory import euler_phi, is_perfect_square, require_odd_modulus
from qsim import (
    OmegaOutcome,
    OmegaOutcomeKind,
    OracleKind,
    derived_seed,
    measurement_generator,
    omega_sample,
)
from utils.formatting import format_real

if TYPE_CHECKING:
    import numpy.typing as npt

EULER_MASCHERONI: Final[float] = 0.5772156649
SIMPLIFIED_BOUND_MINIMUM: Final[int] = 17


@dataclass(frozen=True, slots=True)
class BoundReport:
    """
    The failure bounds after `k` runs of Ω on `modulus`.

    `q_printed` is `None` below 17, where the closed form in ln ln N does not apply.
    """

    modulus: int
    k: int
    p_lower: float
    q_exact: float
    q_printed: float | None

    @property
    def q_upper(self) -> float:
        """The tightest proven bound on the probability that all k runs fail."""
        return self.q_exact

    def to_dict(self) -> dict[str, object]:
        return {
            "N": self.modulus,
            "k": self.k,
            "p_lower": self.p_lower,
            "Q_exact": self.q_exact,
            "Q_printed": self.q_printed,
        }


def iteration_bound(modulus: int, k: int) -> BoundReport:
    """Return the exact-φ & closed-form failure bounds for k runs of Ω on N."""
    if modulus < 3:
        MODULUS_TOO_SMALL_MESSAGE: Final[str] = (
            f"Iteration bounds need N of at least 3, not {modulus}."
        )
        raise InvalidModulusError(MODULUS_TOO_SMALL_MESSAGE, modulus=modulus)

    if k < 0:
        NEGATIVE_ITERATIONS_MESSAGE: Final[str] = (
            f"The number of iterations must be non-negative, not {k}."
        )
        raise InvalidRunConfigError(NEGATIVE_ITERATIONS_MESSAGE)

    p_lower: float = (euler_phi(modulus) / modulus) ** 2

    q_printed: float | None = None
    if modulus >= SIMPLIFIED_BOUND_MINIMUM:
        q_printed = (1 - (1 / (2 * math.log(math.log(modulus)))) ** 2) ** k

    return BoundReport(
        modulus=modulus,
        k=k,
        p_lower=p_lower,
        q_exact=(1 - p_lower) ** k,
        q_printed=q_printed,
    )


def iterations_for_confidence(modulus: int, failure_probability: float = 0.01) -> int:
    """Return the k for which the closed-form bound drops to the given failure probability."""
    if modulus < SIMPLIFIED_BOUND_MINIMUM or not 0 < failure_probability < 1:
        INVALID_CONFIDENCE_MESSAGE: Final[str] = (
            f"Need N ≥ {SIMPLIFIED_BOUND_MINIMUM} & a failure probability in (0, 1)."
        )
        raise InvalidRunConfigError(INVALID_CONFIDENCE_MESSAGE)

    return math.ceil(
        (2 * math.log(math.log(modulus))) ** 2 * math.log(1 / failure_probability)
    )


def phi_lower_bound(modulus: int) -> float:
    """Return the lower bound 1/(e^γ·ln ln N + 3/ln ln N) on φ(N)/N."""
    if modulus < 3:
        MODULUS_TOO_SMALL_MESSAGE: Final[str] = (
            f"The φ(N)/N lower bound needs N of at least 3, not {modulus}."
        )
        raise InvalidModulusError(MODULUS_TOO_SMALL_MESSAGE, modulus=modulus)

    log_log: float = math.log(math.log(modulus))

    return 1 / (math.exp(EULER_MASCHERONI) * log_log + 3 / log_log)


def bound_report_csv(reports: Iterable[BoundReport]) -> str:
    """Serialise bound reports with the columns N, k, p_lower, Q_exact & Q_printed."""
    output: io.StringIO = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(("N", "k", "p_lower", "Q_exact", "Q_printed"))

    report: BoundReport
    for report in reports:
        writer.writerow(
            (
                report.modulus,
                report.k,
                format_real(report.p_lower),
                format_real(report.q_exact),
                format_real(report.q_printed) if report.q_printed is not None else "",
            )
        )

    return output.getvalue()


def _reveals_square_part(outcome: OmegaOutcome) -> bool:
    if outcome.kind == OmegaOutcomeKind.SQUARE_FREE_CERTIFICATE:
        return True

    return (
        outcome.kind == OmegaOutcomeKind.FACTOR_AT_M2
        and outcome.factor is not None
        and is_perfect_square(outcome.factor)
    )


def empirical_failure_rates(modulus: int, runs: int, k_max: int, seed: int = 0, oracle: OracleKind = OracleKind.CLASSICAL) -> tuple[float, ...]:  # noqa: E501
    """
    Return the fraction of runs whose first k Ω calls on N all missed the square part.

    One fraction is returned for each k = 1…k_max. Each run draws its Ω calls from one
    stream seeded from `seed` & the run index.
    """
    require_odd_modulus(modulus)

    if runs < 1 or k_max < 1:
        INVALID_RUNS_MESSAGE: Final[str] = (
            f"Need at least one run & one iteration, not {runs} runs & {k_max} iterations."
        )
        raise InvalidRunConfigError(INVALID_RUNS_MESSAGE)

    first_success: list[int] = []

    run: int
    for run in range(runs):
        stream: np.random.Generator = measurement_generator(derived_seed(seed, run))

        attempt: int = k_max + 1
        iteration: int
        for iteration in range(1, k_max + 1):
            if _reveals_square_part(omega_sample(modulus, seed, oracle, generator=stream)):
                attempt = iteration
                break

        first_success.append(attempt)

    successes: npt.NDArray[np.int64] = np.array(first_success, dtype=np.int64)

    return tuple(float(np.mean(successes > k)) for k in range(1, k_max + 1))
