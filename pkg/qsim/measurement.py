"""
Measurement distributions & reproducible sampling from them.

Each simulated run owns exactly one PCG64 stream seeded from a single 64-bit seed, and
samples by inverse CDF over the outcomes sorted in increasing order, so the same seed always
selects the same outcome on every platform.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "DISTRIBUTION_TOLERANCE",
    "MeasurementDistribution",
    "derived_seed",
    "measurement_generator",
)

import csv
import io
import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from logging import Logger
from typing import TYPE_CHECKING, Final, Self

import numpy as np

from config import settings
from utils.formatting import format_real

if TYPE_CHECKING:
    import numpy.typing as npt

logger: Logger = logging.getLogger("gauss-squarefree")

DISTRIBUTION_TOLERANCE: Final[float] = 1e-12
_RATIONALISATION_TOLERANCE: Final[float] = 1e-6

_SEED_MASK: Final[int] = (1 << 64) - 1


def measurement_generator(seed: int) -> np.random.Generator:
    """Return the single random stream used for every measurement of one seeded run."""
    return np.random.Generator(np.random.PCG64(seed & _SEED_MASK))


def derived_seed(seed: int, *path: int) -> int:
    """Return a 64-bit seed derived deterministically from a parent seed & a branch path."""
    return int(
        np.random.SeedSequence([seed & _SEED_MASK, *path]).generate_state(1, np.uint64)[0]
    )


@dataclass(frozen=True, slots=True)
class MeasurementDistribution:
    """
    Outcome probabilities of measuring one register.

    `exact` holds the same probabilities as fractions when every probability is a recognised
    multiple of a known denominator, and is `None` otherwise.
    """

    outcomes: Mapping[int, float]
    exact: Mapping[int, Fraction] | None = None

    @classmethod
    def from_weights(cls, weights: Mapping[int, float], denominator: int | None = None) -> Self:  # noqa: E501
        """
        Build a distribution from unnormalised outcome weights.

        When a denominator is given, each probability is rationalised against it & the exact
        fractions are kept if every outcome rounds cleanly.
        """
        total: float = sum(weights.values())
        outcomes: dict[int, float] = {
            outcome: weight / total for outcome, weight in sorted(weights.items())
        }

        return cls(
            outcomes=outcomes,
            exact=cls._rationalise(outcomes, denominator) if denominator else None,
        )

    @staticmethod
    def _rationalise(outcomes: Mapping[int, float], denominator: int) -> Mapping[int, Fraction] | None:  # noqa: E501
        exact: dict[int, Fraction] = {}

        outcome: int
        probability: float
        for outcome, probability in outcomes.items():
            numerator: int = round(probability * denominator)
            if abs(probability * denominator - numerator) > _RATIONALISATION_TOLERANCE:
                logger.debug(
                    "Outcome %d has probability %r which is not a multiple of 1/%d",
                    outcome,
                    probability,
                    denominator,
                )
                return None
            if numerator:
                exact[outcome] = Fraction(numerator, denominator)

        if sum(exact.values()) != 1:
            return None

        return exact

    def probability(self, outcome: int) -> float:
        """Return the probability of the given outcome, which is 0 when it is unlisted."""
        return self.outcomes.get(outcome, 0.0)

    def total(self) -> float:
        """Return the summed probability of every outcome."""
        return sum(self.outcomes.values())

    def support(self, cutoff: float | None = None) -> tuple[int, ...]:
        """Return the sorted outcomes whose probability is at least the cutoff."""
        threshold: float = settings["PROBABILITY_CUTOFF"] if cutoff is None else cutoff

        return tuple(
            outcome
            for outcome, probability in self.outcomes.items()
            if probability >= threshold
        )

    def mass_where(self, predicate: Callable[[int], bool]) -> float:
        """Return the summed probability of every outcome satisfying the predicate."""
        return sum(
            probability
            for outcome, probability in self.outcomes.items()
            if predicate(outcome)
        )

    def sample(self, generator: np.random.Generator) -> int:
        """Draw one outcome by inverse CDF over the sorted support."""
        support: tuple[int, ...] = self.support()
        cumulative: npt.NDArray[np.float64] = np.cumsum(
            [self.outcomes[outcome] for outcome in support]
        )

        draw: float = float(generator.random()) * float(cumulative[-1])
        index: int = int(np.searchsorted(cumulative, draw, side="right"))

        return support[min(index, len(support) - 1)]

    def to_dict(self) -> dict[str, object]:
        """Serialise this distribution into a JSON-compatible mapping."""
        serialised: dict[str, object] = {
            str(outcome): probability for outcome, probability in self.outcomes.items()
        }
        if self.exact is None:
            return {"probabilities": serialised}

        return {
            "probabilities": serialised,
            "exact": {str(outcome): str(value) for outcome, value in self.exact.items()},
        }

    def to_csv(self) -> str:
        """Serialise this distribution with the columns outcome, probability & exact."""
        output: io.StringIO = io.StringIO()
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(("outcome", "probability", "exact"))

        outcome: int
        probability: float
        for outcome, probability in self.outcomes.items():
            writer.writerow(
                (
                    outcome,
                    format_real(probability),
                    str(self.exact[outcome]) if self.exact and outcome in self.exact else "",
                )
            )

        return output.getvalue()
