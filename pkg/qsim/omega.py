"""
The Ω subroutine: prepare, U₁, M₁, U₂, QFT & M₂, classified into a factor or a certificate.

Sample mode runs the subroutine once on a seeded stream. Exhaustive mode returns every
outcome class with its probability, exact where the probabilities are recognised fractions.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "OmegaBranch",
    "OmegaMode",
    "OmegaOutcome",
    "OmegaOutcomeKind",
    "OmegaOutcomeSet",
    "omega",
    "omega_exhaustive",
    "omega_sample",
)

import csv
import functools
import io
import logging
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from logging import Logger
from typing import Final

import numpy as np

from config import settings
from exceptions import ExhaustiveLimitExceededError, NotADivisorError
from numtheory import binary_gcd, require_odd_modulus
from qsim.measurement import MeasurementDistribution, measurement_generator
from qsim.oracles import ArithmeticOracle, OracleKind, make_oracle
from qsim.pipeline import (
    apply_qft,
    apply_u1,
    apply_u2,
    measure_m1,
    measure_m2,
    prepare_uniform,
)
from qsim.statevector import Statevector, TraceEvent
from utils.formatting import format_real

logger: Logger = logging.getLogger("gauss-squarefree")

_PROBABILITY_DIGITS: Final[int] = 12


class OmegaMode(StrEnum):
    """Whether Ω is run once on a seeded stream or enumerated over every outcome."""

    SAMPLE = "sample"
    EXHAUSTIVE = "exhaustive"


class OmegaOutcomeKind(StrEnum):
    """How a run of Ω ended."""

    FACTOR_AT_M1 = "factor_at_m1"
    FACTOR_AT_M2 = "factor_at_m2"
    SQUARE_FREE_CERTIFICATE = "square_free_certificate"


_FACTOR_KINDS: Final[frozenset[OmegaOutcomeKind]] = frozenset(
    {OmegaOutcomeKind.FACTOR_AT_M1, OmegaOutcomeKind.FACTOR_AT_M2}
)


def _require_factor(modulus: int, kind: OmegaOutcomeKind, factor: int | None) -> None:
    if kind in _FACTOR_KINDS:
        if factor is None or factor <= 1 or modulus % factor:
            NOT_A_FACTOR_MESSAGE: Final[str] = (
                f"{kind} outcome of Ω for {modulus} must carry a divisor greater than 1, "
                f"not {factor!r}."
            )
            raise NotADivisorError(NOT_A_FACTOR_MESSAGE)

    elif factor is not None:
        CERTIFICATE_WITH_FACTOR_MESSAGE: Final[str] = (
            "A square-free certificate cannot carry a factor."
        )
        raise NotADivisorError(CERTIFICATE_WITH_FACTOR_MESSAGE)


def _classify_m2(k: int, modulus: int) -> tuple[OmegaOutcomeKind, int | None]:
    divisor: int = binary_gcd(k, modulus)

    if divisor == 1:
        return OmegaOutcomeKind.SQUARE_FREE_CERTIFICATE, None

    return OmegaOutcomeKind.FACTOR_AT_M2, divisor


@dataclass(frozen=True, slots=True)
class OmegaOutcome:
    """
    The result of one sampled run of Ω on `modulus`.

    `factor` is the nontrivial divisor found at M₁ or M₂. It equals the modulus itself only
    when M₂ returned k = 0, which happens only for perfect squares.
    """

    modulus: int
    kind: OmegaOutcomeKind
    m1_value: int
    factor: int | None = None
    m2_value: int | None = None
    seed: int | None = None
    m1_distribution: MeasurementDistribution | None = None
    m2_distribution: MeasurementDistribution | None = None
    trace: tuple[TraceEvent, ...] = ()

    def __post_init__(self) -> None:
        """Check that factor outcomes carry a divisor & certificates carry none."""
        _require_factor(self.modulus, self.kind, self.factor)

    def to_dict(self, *, include_distributions: bool = True) -> dict[str, object]:
        """Serialise this outcome & its event trace into a JSON-compatible mapping."""
        serialised: dict[str, object] = {
            "N": self.modulus,
            "seed": self.seed,
            "classification": self.kind.value,
            "factor": self.factor,
            "m1_outcome": self.m1_value,
            "m2_outcome": self.m2_value,
        }

        if include_distributions:
            serialised["m1_distribution"] = (
                self.m1_distribution.to_dict() if self.m1_distribution else None
            )
            serialised["m2_distribution"] = (
                self.m2_distribution.to_dict() if self.m2_distribution else None
            )
            serialised["events"] = [event.to_dict() for event in self.trace]

        return serialised


@dataclass(frozen=True, slots=True)
class OmegaBranch:
    """One class of Ω outcomes sharing a classification & a factor, with its total probability."""  # noqa: E501

    kind: OmegaOutcomeKind
    factor: int | None
    m1_value: int
    m2_values: tuple[int, ...]
    probability: float
    exact: Fraction | None = None

    def to_dict(self) -> dict[str, object]:
        return {
            "classification": self.kind.value,
            "factor": self.factor,
            "m1_outcome": self.m1_value,
            "m2_outcomes": list(self.m2_values),
            "probability": round(self.probability, _PROBABILITY_DIGITS),
            "exact": str(self.exact) if self.exact is not None else None,
        }


@dataclass(frozen=True, slots=True, eq=False)
class OmegaOutcomeSet:
    """Every outcome class of Ω on `modulus`, with the M₁ & M₂ distributions behind them."""

    modulus: int
    branches: tuple[OmegaBranch, ...]
    m1_distribution: MeasurementDistribution
    m2_distribution: MeasurementDistribution

    def probability(self, kind: OmegaOutcomeKind) -> float:
        """Return the total probability of the given classification."""
        return sum(branch.probability for branch in self.branches if branch.kind == kind)

    def exact_probability(self, kind: OmegaOutcomeKind) -> Fraction | None:
        """Return the exact probability of the given classification, if every part is exact."""
        parts: list[Fraction | None] = [
            branch.exact for branch in self.branches if branch.kind == kind
        ]
        if any(part is None for part in parts):
            return None

        return sum((part for part in parts if part is not None), Fraction(0))

    def factors(self) -> tuple[int, ...]:
        """Return every distinct factor that Ω can return, in increasing order."""
        return tuple(
            sorted({branch.factor for branch in self.branches if branch.factor is not None})
        )

    def total(self) -> float:
        return sum(branch.probability for branch in self.branches)

    def to_dict(self) -> dict[str, object]:
        """Serialise this outcome set into a JSON-compatible mapping."""
        return {
            "N": self.modulus,
            "classifications": {
                kind.value: {
                    "probability": round(self.probability(kind), _PROBABILITY_DIGITS),
                    "exact": (
                        str(exact)
                        if (exact := self.exact_probability(kind)) is not None
                        else None
                    ),
                }
                for kind in OmegaOutcomeKind
            },
            "branches": [branch.to_dict() for branch in self.branches],
            "m1_distribution": self.m1_distribution.to_dict(),
            "m2_distribution": self.m2_distribution.to_dict(),
        }

    def to_csv(self) -> str:
        """Serialise the outcome classes with the columns kind, factor, m1, probability & exact."""  # noqa: E501
        output: io.StringIO = io.StringIO()
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(("kind", "factor", "m1", "probability", "exact"))

        branch: OmegaBranch
        for branch in self.branches:
            writer.writerow(
                (
                    branch.kind.value,
                    branch.factor if branch.factor is not None else "",
                    branch.m1_value,
                    format_real(branch.probability),
                    str(branch.exact) if branch.exact is not None else "",
                )
            )

        return output.getvalue()


@dataclass(frozen=True, slots=True, eq=False)
class _OmegaPipeline:
    m1_distribution: MeasurementDistribution
    collapse: Callable[[int], Statevector]
    after_qft: Statevector
    m2_distribution: MeasurementDistribution


@functools.lru_cache(maxsize=256)
def _run_pipeline(modulus: int, oracle_kind: OracleKind) -> _OmegaPipeline:
    oracle: ArithmeticOracle = make_oracle(oracle_kind, modulus)

    uniform: Statevector = prepare_uniform(modulus)
    uniform.require_normalised()

    m1_distribution: MeasurementDistribution
    collapse: Callable[[int], Statevector]
    m1_distribution, collapse = measure_m1(apply_u1(uniform, modulus, oracle=oracle), modulus)

    after_qft: Statevector = apply_qft(
        apply_u2(collapse(1), modulus, oracle=oracle),
        modulus,
    )

    logger.debug("Simulated Ω pipeline over Z_%d with the %s oracle", modulus, oracle_kind)

    return _OmegaPipeline(
        m1_distribution=m1_distribution,
        collapse=collapse,
        after_qft=after_qft,
        m2_distribution=measure_m2(after_qft, modulus),
    )


def omega_sample(modulus: int, seed: int = 0, oracle: OracleKind = OracleKind.CLASSICAL, *, generator: np.random.Generator | None = None) -> OmegaOutcome:  # noqa: E501
    """
    Run Ω once, drawing M₁ & M₂ from the given generator or a fresh stream for `seed`.

    A nontrivial gcd at M₁ is returned as a factor. Otherwise the gcd of the M₂ outcome
    with the modulus is either a factor or, when it is 1, a square-free certificate.
    """
    require_odd_modulus(modulus)

    pipeline: _OmegaPipeline = _run_pipeline(modulus, oracle)
    stream: np.random.Generator = (
        generator if generator is not None else measurement_generator(seed)
    )

    m1_value: int = pipeline.m1_distribution.sample(stream)
    if m1_value != 1:
        return OmegaOutcome(
            modulus=modulus,
            kind=OmegaOutcomeKind.FACTOR_AT_M1,
            m1_value=m1_value,
            factor=m1_value,
            seed=seed,
            m1_distribution=pipeline.m1_distribution,
            trace=pipeline.collapse(m1_value).events,
        )

    m2_value: int = pipeline.m2_distribution.sample(stream)

    kind: OmegaOutcomeKind
    factor: int | None
    kind, factor = _classify_m2(m2_value, modulus)

    logger.debug("Ω for %d with seed %d: M2 returned %d (%s)", modulus, seed, m2_value, kind)

    return OmegaOutcome(
        modulus=modulus,
        kind=kind,
        m1_value=m1_value,
        factor=factor,
        m2_value=m2_value,
        seed=seed,
        m1_distribution=pipeline.m1_distribution,
        m2_distribution=pipeline.m2_distribution,
        trace=(
            *pipeline.after_qft.events,
            TraceEvent(
                "m2.measure",
                {
                    "outcome": m2_value,
                    "probability": pipeline.m2_distribution.probability(m2_value),
                },
            ),
        ),
    )


def _scaled_exact(first: Fraction | None, second: Fraction | None) -> Fraction | None:
    if first is None or second is None:
        return None

    return first * second


@functools.lru_cache(maxsize=256)
def _enumerate_outcomes(modulus: int, oracle: OracleKind) -> OmegaOutcomeSet:
    pipeline: _OmegaPipeline = _run_pipeline(modulus, oracle)
    m1: MeasurementDistribution = pipeline.m1_distribution
    m2: MeasurementDistribution = pipeline.m2_distribution

    branches: list[OmegaBranch] = [
        OmegaBranch(
            kind=OmegaOutcomeKind.FACTOR_AT_M1,
            factor=g,
            m1_value=g,
            m2_values=(),
            probability=m1.probability(g),
            exact=m1.exact.get(g) if m1.exact is not None else None,
        )
        for g in m1.support()
        if g != 1
    ]

    coprime_probability: float = m1.probability(1)
    coprime_exact: Fraction | None = m1.exact.get(1) if m1.exact is not None else None

    grouped: dict[tuple[OmegaOutcomeKind, int | None], list[int]] = {}

    k: int
    for k in m2.support():
        grouped.setdefault(_classify_m2(k, modulus), []).append(k)

    kind: OmegaOutcomeKind
    factor: int | None
    m2_values: list[int]
    for (kind, factor), m2_values in grouped.items():
        branches.append(
            OmegaBranch(
                kind=kind,
                factor=factor,
                m1_value=1,
                m2_values=tuple(m2_values),
                probability=coprime_probability * sum(m2.probability(k) for k in m2_values),
                exact=_scaled_exact(
                    coprime_exact,
                    (
                        sum((m2.exact[k] for k in m2_values if k in m2.exact), Fraction(0))
                        if m2.exact is not None
                        else None
                    ),
                ),
            )
        )

    kind_order: list[OmegaOutcomeKind] = list(OmegaOutcomeKind)

    return OmegaOutcomeSet(
        modulus=modulus,
        branches=tuple(
            sorted(
                branches,
                key=lambda branch: (kind_order.index(branch.kind), branch.factor or 0),
            )
        ),
        m1_distribution=m1,
        m2_distribution=m2,
    )


def omega_exhaustive(modulus: int, oracle: OracleKind = OracleKind.CLASSICAL) -> OmegaOutcomeSet:  # noqa: E501
    """Return every outcome class of Ω with its probability."""
    require_odd_modulus(modulus)

    exhaustive_limit: int = settings["EXHAUSTIVE_LIMIT"]
    if modulus > exhaustive_limit:
        EXHAUSTIVE_LIMIT_MESSAGE: Final[str] = (
            f"Exhaustive Ω is limited to moduli up to {exhaustive_limit}, not {modulus}."
        )
        raise ExhaustiveLimitExceededError(EXHAUSTIVE_LIMIT_MESSAGE)

    return _enumerate_outcomes(modulus, oracle)


def omega(modulus: int, mode: OmegaMode = OmegaMode.SAMPLE, seed: int = 0, oracle: OracleKind = OracleKind.CLASSICAL) -> OmegaOutcome | OmegaOutcomeSet:  # noqa: E501
    """Run Ω in the given mode."""
    if mode == OmegaMode.EXHAUSTIVE:
        return omega_exhaustive(modulus, oracle)

    return omega_sample(modulus, seed, oracle)
