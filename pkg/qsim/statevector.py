"""Immutable sparse statevector over the basis |a⟩_A|b⟩_B of two integer registers."""

from collections.abc import Sequence

__all__: Sequence[str] = ("NORM_TOLERANCE", "TraceEvent", "Statevector")

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Final, Self

import numpy as np

from exceptions import UnnormalisedStateError

if TYPE_CHECKING:
    import numpy.typing as npt

NORM_TOLERANCE: Final[float] = 1e-12
_ZERO_AMPLITUDE: Final[float] = 1e-13


@dataclass(frozen=True, slots=True)
class TraceEvent:
    """One recorded stage of a simulated pipeline."""

    stage: str
    details: Mapping[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict[str, object]:
        """Serialise this event into a JSON-compatible mapping."""
        return {"stage": self.stage, **self.details}


@dataclass(frozen=True, slots=True, eq=False)
class Statevector:
    """
    A normalised superposition of basis states |a⟩_A|b⟩_B with a in [0, N).

    Only nonzero amplitudes are stored. Operations never mutate a statevector; they return
    a new one with the stage appended to `events`.
    """

    modulus: int
    amplitudes: Mapping[tuple[int, int], complex]
    events: tuple[TraceEvent, ...] = ()

    @classmethod
    def from_branches(cls, modulus: int, branches: Iterable[tuple[tuple[int, int], complex]], events: tuple[TraceEvent, ...] = ()) -> Self:  # noqa: E501
        """Build a statevector from (basis state, amplitude) pairs, dropping zero amplitudes."""
        amplitudes: dict[tuple[int, int], complex] = {}

        basis_state: tuple[int, int]
        amplitude: complex
        for basis_state, amplitude in branches:
            if abs(amplitude) > _ZERO_AMPLITUDE:
                amplitudes[basis_state] = amplitudes.get(basis_state, 0j) + amplitude

        return cls(modulus=modulus, amplitudes=amplitudes, events=events)

    @classmethod
    def from_blocks(cls, modulus: int, blocks: Mapping[int, "npt.NDArray[np.complex128]"], events: tuple[TraceEvent, ...] = ()) -> Self:  # noqa: E501
        """Build a statevector from dense register-A amplitude arrays keyed by register B."""
        return cls.from_branches(
            modulus,
            (
                ((int(a), b), complex(block[a]))
                for b, block in blocks.items()
                for a in np.flatnonzero(np.abs(block) > _ZERO_AMPLITUDE)
            ),
            events,
        )

    def with_event(self, stage: str, **details: object) -> Self:
        """Return this statevector with one more event appended to its trace."""
        return type(self)(
            modulus=self.modulus,
            amplitudes=self.amplitudes,
            events=(*self.events, TraceEvent(stage, details)),
        )

    def amplitude(self, a: int, b: int = 0) -> complex:
        """Return ⟨a, b|state⟩."""
        return self.amplitudes.get((a, b), 0j)

    def norm(self) -> float:
        """Return the Euclidean norm of the amplitudes."""
        return math.sqrt(sum(abs(amplitude) ** 2 for amplitude in self.amplitudes.values()))

    def require_normalised(self, tolerance: float = NORM_TOLERANCE) -> None:
        """Raise `UnnormalisedStateError` if the norm differs from 1 by more than tolerance."""
        norm: float = self.norm()
        if abs(norm - 1) > tolerance:
            UNNORMALISED_MESSAGE: Final[str] = (
                f"Statevector over Z_{self.modulus} has norm {norm!r}."
            )
            raise UnnormalisedStateError(UNNORMALISED_MESSAGE)

    def register_b_values(self) -> tuple[int, ...]:
        """Return the sorted distinct values held by register B across all branches."""
        return tuple(sorted({b for _, b in self.amplitudes}))

    def register_a_support(self) -> tuple[int, ...]:
        """Return the sorted distinct values held by register A across all branches."""
        return tuple(sorted({a for a, _ in self.amplitudes}))

    def dense_block(self, b: int) -> "npt.NDArray[np.complex128]":
        """Return the dense register-A amplitudes of the branches whose register B holds b."""
        block: npt.NDArray[np.complex128] = np.zeros(self.modulus, dtype=np.complex128)

        a: int
        register_b: int
        amplitude: complex
        for (a, register_b), amplitude in self.amplitudes.items():
            if register_b == b:
                block[a] = amplitude

        return block

    def blocks(self) -> dict[int, "npt.NDArray[np.complex128]"]:
        """Return the dense register-A amplitudes for every value held by register B."""
        return {b: self.dense_block(b) for b in self.register_b_values()}
