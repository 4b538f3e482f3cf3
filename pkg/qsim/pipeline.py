"""
The stages of the Ω subroutine as operations on immutable statevectors.

Every stage returns a new normalised state with its name appended to the event trace.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "apply_inverse_qft",
    "apply_qft",
    "apply_u1",
    "apply_u2",
    "measure_m1",
    "measure_m2",
    "prepare_uniform",
)

import logging
import math
from collections.abc import Callable
from logging import Logger
from typing import TYPE_CHECKING, Final

import numpy as np

from exceptions import InvalidModulusError, NonCoprimeSupportError, UnnormalisedStateError
from numtheory import euler_phi, require_odd_modulus
from qsim.measurement import MeasurementDistribution
from qsim.oracles import ArithmeticOracle, ClassicalOracle
from qsim.statevector import Statevector, TraceEvent

if TYPE_CHECKING:
    import numpy.typing as npt

logger: Logger = logging.getLogger("gauss-squarefree")


def _require_matching_modulus(state: Statevector, modulus: int) -> None:
    if state.modulus != modulus:
        MODULUS_MISMATCH_MESSAGE: Final[str] = (
            f"Statevector is over Z_{state.modulus} but modulus {modulus} was given."
        )
        raise InvalidModulusError(MODULUS_MISMATCH_MESSAGE, modulus=modulus)


def _resolve_oracle(state: Statevector, modulus: int, oracle: ArithmeticOracle | None) -> ArithmeticOracle:  # noqa: E501
    _require_matching_modulus(state, modulus)

    if oracle is None:
        return ClassicalOracle(modulus)

    if oracle.modulus != modulus:
        ORACLE_MISMATCH_MESSAGE: Final[str] = (
            f"Oracle is for modulus {oracle.modulus} but modulus {modulus} was given."
        )
        raise InvalidModulusError(ORACLE_MISMATCH_MESSAGE, modulus=modulus)

    return oracle


def _permute_register_b(state: Statevector, transform: Callable[["npt.NDArray[np.int64]", "npt.NDArray[np.int64]"], "npt.NDArray[np.int64]"], stage: str, **details: object) -> Statevector:  # noqa: E501
    keys: list[tuple[int, int]] = list(state.amplitudes)
    a_values: npt.NDArray[np.int64] = np.array([a for a, _ in keys], dtype=np.int64)
    b_values: npt.NDArray[np.int64] = np.array([b for _, b in keys], dtype=np.int64)
    new_b_values: npt.NDArray[np.int64] = transform(a_values, b_values)

    return Statevector.from_branches(
        state.modulus,
        (
            ((a, int(new_b)), state.amplitudes[(a, b)])
            for (a, b), new_b in zip(keys, new_b_values, strict=True)
        ),
        (*state.events, TraceEvent(stage, details)),
    )


def prepare_uniform(modulus: int) -> Statevector:
    """Return the uniform superposition of |m⟩|0⟩ over m in [1, N - 1]."""
    require_odd_modulus(modulus)

    amplitude: float = 1 / math.sqrt(modulus - 1)

    return Statevector.from_branches(
        modulus,
        (((m, 0), complex(amplitude)) for m in range(1, modulus)),
    ).with_event("prepare_uniform", N=modulus, support=modulus - 1)


def apply_u1(state: Statevector, modulus: int, *, oracle: ArithmeticOracle | None = None) -> Statevector:  # noqa: E501
    """Map every branch |m⟩|b⟩ to |m⟩|b ⊕ gcd(m, N)⟩."""
    resolved_oracle: ArithmeticOracle = _resolve_oracle(state, modulus, oracle)

    return _permute_register_b(
        state,
        lambda a, b: b ^ resolved_oracle.gcd_values(a),
        "u1",
        oracle=resolved_oracle.KIND.value,
    )


def measure_m1(state: Statevector, modulus: int) -> tuple[MeasurementDistribution, Callable[[int], Statevector]]:  # noqa: E501
    """
    Return the distribution of register B & a function collapsing the state onto an outcome.

    Probabilities are rationalised against N - 1, the size of the uniform support.
    """
    _require_matching_modulus(state, modulus)

    weights: dict[int, float] = {}

    b: int
    amplitude: complex
    for (_, b), amplitude in state.amplitudes.items():
        weights[b] = weights.get(b, 0.0) + abs(amplitude) ** 2

    distribution: MeasurementDistribution = MeasurementDistribution.from_weights(
        weights,
        denominator=modulus - 1,
    )

    def collapse(outcome: int) -> Statevector:
        probability: float = distribution.probability(outcome)
        if probability == 0:
            ZERO_PROBABILITY_MESSAGE: Final[str] = (
                f"Cannot collapse onto M1 outcome {outcome}, which has probability 0."
            )
            raise UnnormalisedStateError(ZERO_PROBABILITY_MESSAGE)

        scale: float = 1 / math.sqrt(probability)
        collapsed: Statevector = Statevector.from_branches(
            modulus,
            (
                (basis_state, amplitude * scale)
                for basis_state, amplitude in state.amplitudes.items()
                if basis_state[1] == outcome
            ),
            state.events,
        ).with_event("m1.collapse", outcome=outcome, probability=probability)
        collapsed.require_normalised()

        return collapsed

    logger.debug("M1 over Z_%d has %d outcomes", modulus, len(distribution.outcomes))

    return distribution, collapse


def apply_u2(state: Statevector, modulus: int, *, oracle: ArithmeticOracle | None = None) -> Statevector:  # noqa: E501
    """
    Multiply the amplitude of every branch |m⟩|1⟩ by χ_N(m) using phase kickback.

    χ_N(m) is computed into register B (held as 1 or N - 1), a phase of -1 is applied where
    B holds N - 1 & the character is then uncomputed, restoring B to 1.
    """
    resolved_oracle: ArithmeticOracle = _resolve_oracle(state, modulus, oracle)

    a_values: npt.NDArray[np.int64] = np.array(state.register_a_support(), dtype=np.int64)
    gcds: npt.NDArray[np.int64] = resolved_oracle.gcd_values(a_values)
    if (gcds != 1).any() or state.register_b_values() not in ((), (1,)):
        NON_COPRIME_MESSAGE: Final[str] = (
            f"U2 over Z_{modulus} requires every branch to hold m coprime to N "
            "& register B equal to 1."
        )
        raise NonCoprimeSupportError(NON_COPRIME_MESSAGE)

    encodings: dict[int, int] = dict(
        zip(
            (int(a) for a in a_values),
            (int(encoding) for encoding in resolved_oracle.character_encodings(a_values)),
            strict=True,
        )
    )

    def toggle_character(
        a: "npt.NDArray[np.int64]",
        b: "npt.NDArray[np.int64]",
    ) -> "npt.NDArray[np.int64]":
        return b ^ np.array([encodings[int(m)] ^ 1 for m in a], dtype=np.int64)

    computed: Statevector = _permute_register_b(
        state,
        toggle_character,
        "u2.compute_character",
        oracle=resolved_oracle.KIND.value,
    )

    phased: Statevector = Statevector.from_branches(
        modulus,
        (
            (basis_state, -amplitude if basis_state[1] == modulus - 1 else amplitude)
            for basis_state, amplitude in computed.amplitudes.items()
        ),
        computed.events,
    ).with_event(
        "u2.conditional_phase",
        flipped=sum(1 for _, b in computed.amplitudes if b == modulus - 1),
    )

    uncomputed: Statevector = _permute_register_b(
        phased,
        toggle_character,
        "u2.uncompute_character",
    )
    uncomputed.require_normalised()

    return uncomputed


def _transform_blocks(state: Statevector, modulus: int, transform: Callable[["npt.NDArray[np.complex128]"], "npt.NDArray[np.complex128]"], stage: str) -> Statevector:  # noqa: E501
    _require_matching_modulus(state, modulus)

    transformed: Statevector = Statevector.from_blocks(
        modulus,
        {b: transform(block) for b, block in state.blocks().items()},
        state.events,
    ).with_event(stage, N=modulus)
    transformed.require_normalised()

    return transformed


def apply_qft(state: Statevector, modulus: int) -> Statevector:
    """Apply the order-N Fourier transform |m⟩ ↦ N^{-1/2}·Σ_k e^{2πimk/N}|k⟩ to register A."""
    return _transform_blocks(
        state,
        modulus,
        lambda block: np.fft.ifft(block, norm="ortho"),
        "qft",
    )


def apply_inverse_qft(state: Statevector, modulus: int) -> Statevector:
    """Undo `apply_qft()`."""
    return _transform_blocks(
        state,
        modulus,
        lambda block: np.fft.fft(block, norm="ortho"),
        "inverse_qft",
    )


def measure_m2(state: Statevector, modulus: int) -> MeasurementDistribution:
    """
    Return the distribution of register A, marginalised over register B.

    Probabilities are rationalised against N·φ(N): after the Fourier transform of the
    character state, every probability is |G(k, χ)|²/(N·φ(N)) & |G(k, χ)|² is an integer.
    """
    _require_matching_modulus(state, modulus)

    weights: dict[int, float] = {}

    a: int
    amplitude: complex
    for (a, _), amplitude in state.amplitudes.items():
        weights[a] = weights.get(a, 0.0) + abs(amplitude) ** 2

    return MeasurementDistribution.from_weights(
        weights,
        denominator=modulus * euler_phi(modulus),
    )
