"""Test suite for the qsim package."""

from collections.abc import Sequence

__all__: Sequence[str] = ()

import math
from fractions import Fraction
from typing import TYPE_CHECKING, Final

import numpy as np
import pytest
import sympy

from exceptions import InvalidModulusError, NonCoprimeSupportError, UnnormalisedStateError
from gauss import GaussSumMethod, GaussSumTable, gauss_sum, gauss_table
from numtheory import SquareFreeDecomposition, squarefree_oracle
from qsim import (
    NORM_TOLERANCE,
    CircuitOracle,
    ClassicalOracle,
    MeasurementDistribution,
    OmegaMode,
    OmegaOutcome,
    OmegaOutcomeKind,
    OmegaOutcomeSet,
    OracleKind,
    Statevector,
    apply_inverse_qft,
    apply_qft,
    apply_u1,
    apply_u2,
    derived_seed,
    measure_m1,
    measure_m2,
    measurement_generator,
    omega,
    omega_exhaustive,
    omega_sample,
    prepare_uniform,
)

if TYPE_CHECKING:
    from collections.abc import Callable

_ODD_MODULI: Final[range] = range(3, 2001, 2)


def _character_state(modulus: int) -> Statevector:
    collapse: Callable[[int], Statevector]
    _, collapse = measure_m1(apply_u1(prepare_uniform(modulus), modulus), modulus)

    return apply_u2(collapse(1), modulus)


def _gcd_mass(distribution: MeasurementDistribution, modulus: int, value: int) -> float:
    return sum(
        distribution.probability(k)
        for k in distribution.outcomes
        if math.gcd(k, modulus) == value
    )


class TestStatePreparation:
    """Test case to unit-test the uniform superposition & the gcd oracle U1."""

    @staticmethod
    def test_uniform_superposition_of_45() -> None:
        """Test that 44 equal amplitudes are prepared with unit norm."""
        state: Statevector = prepare_uniform(45)

        assert len(state.amplitudes) == 44
        assert abs(state.norm() - 1) < NORM_TOLERANCE
        assert state.amplitude(0) == 0

    @staticmethod
    def test_uniform_amplitudes_are_identical() -> None:
        """Test that every m in [1, 14] has the same amplitude over 15."""
        state: Statevector = prepare_uniform(15)

        assert len({state.amplitude(m) for m in range(1, 15)}) == 1

    @pytest.mark.parametrize(("m", "gcd"), ((9, 9), (2, 1), (15, 15), (5, 5)))
    def test_u1_writes_gcd(self, m: int, gcd: int) -> None:
        """Test that U1 stores gcd(m, 45) in register B of the branch m."""
        state: Statevector = apply_u1(prepare_uniform(45), 45)

        assert abs(state.amplitude(m, gcd)) > 0
        assert state.amplitude(m, 0) == 0

    @staticmethod
    def test_modulus_mismatch_rejected() -> None:
        """Test that applying U1 for another modulus raises `InvalidModulusError`."""
        with pytest.raises(InvalidModulusError):
            apply_u1(prepare_uniform(45), 15)

    @pytest.mark.parametrize("modulus", (1, 4, 10))
    def test_invalid_modulus_rejected(self, modulus: int) -> None:
        """Test that a uniform superposition cannot be prepared for an even or tiny N."""
        with pytest.raises(InvalidModulusError):
            prepare_uniform(modulus)


class TestMeasureM1:
    """Test case to unit-test the first measurement & its collapse."""

    @staticmethod
    def test_distribution_of_45() -> None:
        """Test that Pr[1] = 24/44 & Pr[9] = 4/44 for N = 45."""
        distribution: MeasurementDistribution
        distribution, _ = measure_m1(apply_u1(prepare_uniform(45), 45), 45)

        assert distribution.exact is not None
        assert distribution.exact[1] == Fraction(24, 44)
        assert distribution.exact[9] == Fraction(4, 44)
        assert set(distribution.outcomes) == {1, 3, 5, 9, 15}
        assert abs(distribution.total() - 1) < 1e-12

    @staticmethod
    def test_collapse_onto_units() -> None:
        """Test that collapsing onto 1 keeps exactly the units with equal amplitudes."""
        collapse: Callable[[int], Statevector]
        _, collapse = measure_m1(apply_u1(prepare_uniform(45), 45), 45)

        collapsed: Statevector = collapse(1)

        assert collapsed.register_a_support() == tuple(
            m for m in range(1, 45) if math.gcd(m, 45) == 1
        )
        assert collapsed.register_b_values() == (1,)
        assert abs(collapsed.norm() - 1) < NORM_TOLERANCE

    @staticmethod
    def test_collapse_onto_impossible_outcome() -> None:
        """Test that collapsing onto a zero-probability outcome raises an error."""
        collapse: Callable[[int], Statevector]
        _, collapse = measure_m1(apply_u1(prepare_uniform(45), 45), 45)

        with pytest.raises(UnnormalisedStateError):
            collapse(7)


class TestPhaseOracle:
    """Test case to unit-test the character phase oracle U2."""

    @pytest.mark.parametrize("modulus", (15, 45, 63))
    def test_phases_are_the_character(self, modulus: int) -> None:
        """Test that every unit m carries the phase χ_N(m) with register B restored to 1."""
        state: Statevector = _character_state(modulus)
        amplitude: float = 1 / math.sqrt(sympy.totient(modulus))

        assert state.register_b_values() == (1,)
        assert all(
            abs(state.amplitude(m, 1) - int(sympy.jacobi_symbol(m, modulus)) * amplitude)
            < 1e-12
            for m in state.register_a_support()
        )

    @staticmethod
    def test_non_coprime_support_rejected() -> None:
        """Test that U2 refuses a state holding a branch that is not a unit."""
        with pytest.raises(NonCoprimeSupportError):
            apply_u2(apply_u1(prepare_uniform(45), 45), 45)

    @staticmethod
    def test_trace_records_every_stage() -> None:
        """Test that every stage of the pipeline appends its event, in order."""
        stages: list[str] = [event.stage for event in _character_state(15).events]

        assert stages == [
            "prepare_uniform",
            "u1",
            "m1.collapse",
            "u2.compute_character",
            "u2.conditional_phase",
            "u2.uncompute_character",
        ]


class TestFourierTransform:
    """Test case to unit-test the order-N Fourier transform of register A."""

    @staticmethod
    def test_amplitudes_of_45_are_gauss_sums() -> None:
        """Test that ⟨k|QFT|φ⟩ = G(k, χ)/√(N·φ(N)) for N = 45, one sum at a time."""
        state: Statevector = apply_qft(_character_state(45), 45)
        scale: float = math.sqrt(45 * 24)

        assert all(
            abs(state.amplitude(k, 1) - gauss_sum(k, 45) / scale) < 1e-9
            for k in range(45)
        )

    @staticmethod
    @pytest.mark.slow
    def test_amplitudes_are_gauss_sums_for_every_odd_modulus() -> None:
        """Test that ⟨k|QFT|φ⟩ = G(k, χ)/√(N·φ(N)) for every odd N up to 2000."""
        modulus: int
        for modulus in _ODD_MODULI:
            state: Statevector = apply_qft(_character_state(modulus), modulus)
            table: GaussSumTable = gauss_table(modulus, GaussSumMethod.FFT)
            scale: float = math.sqrt(modulus * int(sympy.totient(modulus)))

            assert state.register_b_values() == (1,), modulus
            assert np.max(
                np.abs(state.dense_block(1) - np.array([table[k] for k in range(modulus)]) / scale)  # noqa: E501
            ) < 1e-9, modulus

    @staticmethod
    def test_inverse_undoes_transform() -> None:
        """Test that the inverse transform restores the character state."""
        state: Statevector = _character_state(45)
        restored: Statevector = apply_inverse_qft(apply_qft(state, 45), 45)

        assert all(
            abs(restored.amplitude(a, b) - amplitude) < 1e-12
            for (a, b), amplitude in state.amplitudes.items()
        )
        assert set(restored.amplitudes) == set(state.amplitudes)


class TestMeasureM2:
    """Test case to unit-test the second measurement."""

    @staticmethod
    def test_square_part_outcomes_of_45() -> None:
        """Test that Pr[k] = 1/6 for each k in {9, 18, 27, 36}."""
        distribution: MeasurementDistribution = measure_m2(
            apply_qft(_character_state(45), 45),
            45,
        )

        assert distribution.exact is not None
        assert all(distribution.exact[k] == Fraction(1, 6) for k in (9, 18, 27, 36))
        assert abs(distribution.mass_where(lambda k: math.gcd(k, 45) == 9) - 2 / 3) < 1e-9

    @staticmethod
    def test_square_free_support_is_the_units() -> None:
        """Test that the support for N = 15 is exactly the k coprime to 15."""
        distribution: MeasurementDistribution = measure_m2(
            apply_qft(_character_state(15), 15),
            15,
        )

        assert distribution.support() == tuple(k for k in range(15) if math.gcd(k, 15) == 1)

    @staticmethod
    def test_square_part_probability_of_175() -> None:
        """Test that Pr[gcd(k, N) = s²] = φ(N)·r/(N·φ(r)) for 175 = 7·5²."""
        distribution: MeasurementDistribution = measure_m2(
            apply_qft(_character_state(175), 175),
            175,
        )

        assert abs(
            distribution.mass_where(lambda k: math.gcd(k, 175) == 25) - 120 * 7 / (175 * 6)
        ) < 1e-9


class TestPipelineSweeps:
    """Test case to unit-test the invariants of the Ω pipeline over every odd modulus up to 2000."""  # noqa: E501

    @staticmethod
    @pytest.mark.slow
    def test_every_stage_preserves_the_norm() -> None:
        """Test that preparation, U1, every M1 collapse, U2 & the QFT keep the norm at 1."""
        modulus: int
        for modulus in _ODD_MODULI:
            uniform: Statevector = prepare_uniform(modulus)
            after_u1: Statevector = apply_u1(uniform, modulus)

            m1_distribution: MeasurementDistribution
            collapse: Callable[[int], Statevector]
            m1_distribution, collapse = measure_m1(after_u1, modulus)

            after_u2: Statevector = apply_u2(collapse(1), modulus)
            states: list[Statevector] = [
                uniform,
                after_u1,
                *(collapse(outcome) for outcome in m1_distribution.support()),
                after_u2,
                apply_qft(after_u2, modulus),
            ]

            assert all(abs(state.norm() - 1) < NORM_TOLERANCE for state in states), modulus

    @staticmethod
    @pytest.mark.slow
    def test_m2_dichotomy() -> None:
        """Test that M2 hits exactly the units when N is square-free & never a unit otherwise."""
        modulus: int
        for modulus in _ODD_MODULI:
            support: tuple[int, ...] = omega_exhaustive(modulus).m2_distribution.support()
            units: tuple[int, ...] = tuple(k for k in range(modulus) if math.gcd(k, modulus) == 1)  # noqa: E501

            if squarefree_oracle(modulus).s == 1:
                assert support == units, modulus
            else:
                assert not set(support) & set(units), modulus

    @staticmethod
    @pytest.mark.slow
    def test_square_part_probability() -> None:
        """Test that Pr[gcd(k, N) = s²] = φ(N)·r/(N·φ(r)) for every odd non-square-free N."""
        modulus: int
        for modulus in _ODD_MODULI:
            decomposition: SquareFreeDecomposition = squarefree_oracle(modulus)
            if decomposition.s == 1:
                continue

            square_part: int = decomposition.s**2
            expected: float = float(
                sympy.totient(modulus) * decomposition.r
                / (modulus * sympy.totient(decomposition.r))
            )

            mass: float = _gcd_mass(omega_exhaustive(modulus).m2_distribution, modulus, square_part)

            assert abs(mass - expected) < 1e-9, modulus

    @staticmethod
    @pytest.mark.slow
    def test_perfect_square_gcds_are_the_square_part() -> None:
        """Test that every M2 outcome k whose gcd with N is a square z² > 1 has z² = s²."""
        modulus: int
        for modulus in _ODD_MODULI:
            square_part: int = squarefree_oracle(modulus).s ** 2
            if square_part == 1:
                continue

            k: int
            for k in omega_exhaustive(modulus).m2_distribution.support():
                common: int = math.gcd(k, modulus)
                if common > 1 and math.isqrt(common) ** 2 == common:
                    assert common == square_part, (modulus, k)


class TestMeasurementDistribution:
    """Test case to unit-test distributions & seeded sampling from them."""

    @staticmethod
    def test_from_weights_normalises_and_rationalises() -> None:
        """Test that weights are normalised & exact fractions are recovered."""
        distribution: MeasurementDistribution = MeasurementDistribution.from_weights(
            {3: 1.0, 1: 3.0},
            denominator=4,
        )

        assert list(distribution.outcomes) == [1, 3]
        assert distribution.exact == {1: Fraction(3, 4), 3: Fraction(1, 4)}

    @staticmethod
    def test_irrational_probabilities_have_no_exact_form() -> None:
        """Test that probabilities that are not multiples of 1/denominator are not exact."""
        distribution: MeasurementDistribution = MeasurementDistribution.from_weights(
            {0: 1.0, 1: math.sqrt(2)},
            denominator=4,
        )

        assert distribution.exact is None

    @staticmethod
    def test_same_seed_same_samples() -> None:
        """Test that the same seed draws the same sequence of outcomes."""
        distribution: MeasurementDistribution = MeasurementDistribution.from_weights(
            {outcome: 1.0 for outcome in range(10)},
        )
        first: np.random.Generator = measurement_generator(42)
        second: np.random.Generator = measurement_generator(42)

        assert [distribution.sample(first) for _ in range(50)] == [
            distribution.sample(second) for _ in range(50)
        ]

    @staticmethod
    def test_sampling_never_leaves_the_support() -> None:
        """Test that only outcomes with nonzero probability are sampled."""
        distribution: MeasurementDistribution = MeasurementDistribution.from_weights(
            {2: 1.0, 7: 0.0, 11: 3.0},
        )
        generator: np.random.Generator = measurement_generator(0)

        assert {distribution.sample(generator) for _ in range(200)} <= {2, 11}

    @staticmethod
    def test_derived_seeds_differ_per_branch() -> None:
        """Test that derived seeds are reproducible & distinct between branches."""
        assert derived_seed(7, 0) == derived_seed(7, 0)
        assert derived_seed(7, 0) != derived_seed(7, 1)
        assert 0 <= derived_seed(7, 0) < 1 << 64


class TestOmegaExhaustive:
    """Test case to unit-test the enumeration of every outcome of Ω."""

    @staticmethod
    def test_outcomes_of_45() -> None:
        """Test the classification probabilities of Ω on 45."""
        outcome_set: OmegaOutcomeSet = omega_exhaustive(45)

        assert outcome_set.exact_probability(OmegaOutcomeKind.FACTOR_AT_M1) == Fraction(20, 44)
        assert outcome_set.exact_probability(OmegaOutcomeKind.FACTOR_AT_M2) == Fraction(24, 44)
        assert outcome_set.probability(OmegaOutcomeKind.SQUARE_FREE_CERTIFICATE) == 0
        assert abs(outcome_set.total() - 1) < 1e-9
        assert 9 in outcome_set.factors()

    @staticmethod
    def test_outcomes_of_15() -> None:
        """Test that Ω certifies 15 square-free with probability φ(15)/14."""
        outcome_set: OmegaOutcomeSet = omega_exhaustive(15)

        assert outcome_set.exact_probability(
            OmegaOutcomeKind.SQUARE_FREE_CERTIFICATE
        ) == Fraction(8, 14)
        assert outcome_set.probability(OmegaOutcomeKind.FACTOR_AT_M2) == 0

    @pytest.mark.parametrize("modulus", (3, 5, 7, 11, 13))
    def test_primes_are_always_certified(self, modulus: int) -> None:
        """Test that Ω on an odd prime always certifies it square-free."""
        assert omega_exhaustive(modulus).probability(
            OmegaOutcomeKind.SQUARE_FREE_CERTIFICATE
        ) == pytest.approx(1)

    @staticmethod
    def test_every_factor_divides() -> None:
        """Test that every factor Ω can return is a nontrivial divisor."""
        modulus: int
        for modulus in range(3, 200, 2):
            assert all(
                1 < factor <= modulus and modulus % factor == 0
                for factor in omega_exhaustive(modulus).factors()
            )

    @staticmethod
    def test_serialisation() -> None:
        """Test that the outcome set serialises every classification."""
        serialised: dict[str, object] = omega_exhaustive(45).to_dict()
        classifications = serialised["classifications"]

        assert isinstance(classifications, dict)
        assert classifications["factor_at_m1"]["exact"] == "5/11"
        assert omega_exhaustive(45).to_csv().splitlines()[0] == (
            "kind,factor,m1,probability,exact"
        )


class TestOmegaSample:
    """Test case to unit-test single seeded runs of Ω."""

    @staticmethod
    def test_reproducible() -> None:
        """Test that the same seed gives the same outcome."""
        SEED: Final[int] = 12345

        first: OmegaOutcome = omega_sample(45, SEED)
        second: OmegaOutcome = omega_sample(45, SEED)

        assert (first.kind, first.factor, first.m1_value, first.m2_value) == (
            second.kind,
            second.factor,
            second.m1_value,
            second.m2_value,
        )

    @staticmethod
    def test_sample_is_a_possible_outcome() -> None:
        """Test that sampled outcomes always lie in the exhaustive outcome set."""
        outcome_set: OmegaOutcomeSet = omega_exhaustive(63)

        seed: int
        for seed in range(100):
            outcome: OmegaOutcome = omega_sample(63, seed)

            assert outcome.factor is None or outcome.factor in outcome_set.factors()
            assert outcome_set.probability(outcome.kind) > 0

    @staticmethod
    def test_45_never_certified() -> None:
        """Test that Ω never certifies a number with a square factor."""
        assert all(
            omega_sample(45, seed).kind != OmegaOutcomeKind.SQUARE_FREE_CERTIFICATE
            for seed in range(100)
        )

    @staticmethod
    def test_dispatch_by_mode() -> None:
        """Test that `omega()` returns an outcome set in exhaustive mode."""
        assert isinstance(omega(15, OmegaMode.EXHAUSTIVE), OmegaOutcomeSet)
        assert isinstance(omega(15, OmegaMode.SAMPLE, seed=3), OmegaOutcome)

    @staticmethod
    def test_trace_ends_with_measurement() -> None:
        """Test that a run reaching M₂ ends its trace with the M₂ measurement."""
        seed: int = next(seed for seed in range(100) if omega_sample(15, seed).m1_value == 1)

        assert omega_sample(15, seed).trace[-1].stage == "m2.measure"


class TestOracles:
    """Test case to unit-test the classical & circuit arithmetic oracles."""

    @pytest.mark.parametrize("modulus", (3, 15, 45, 63))
    def test_circuit_oracle_matches_classical(self, modulus: int) -> None:
        """Test that both oracles produce the same gcds & character encodings."""
        residues: np.ndarray = np.arange(modulus)
        classical: ClassicalOracle = ClassicalOracle(modulus)
        circuit: CircuitOracle = CircuitOracle(modulus)

        assert np.array_equal(classical.gcd_values(residues), circuit.gcd_values(residues))
        assert np.array_equal(
            classical.character_encodings(residues),
            circuit.character_encodings(residues),
        )

    @staticmethod
    def test_circuit_oracle_outcomes_match() -> None:
        """Test that Ω on 45 has the same outcome set through both oracles."""
        classical: OmegaOutcomeSet = omega_exhaustive(45, OracleKind.CLASSICAL)
        circuit: OmegaOutcomeSet = omega_exhaustive(45, OracleKind.CIRCUIT)

        assert classical.factors() == circuit.factors()
        assert circuit.exact_probability(OmegaOutcomeKind.FACTOR_AT_M2) == Fraction(24, 44)

    @staticmethod
    def test_circuit_oracle_modulus_limit() -> None:
        """Test that the circuit oracle refuses moduli of 64 or more."""
        with pytest.raises(InvalidModulusError):
            CircuitOracle(65)

    @staticmethod
    def test_out_of_range_residues_rejected() -> None:
        """Test that oracle inputs outside [0, N) raise `InvalidModulusError`."""
        with pytest.raises(InvalidModulusError):
            ClassicalOracle(15).gcd_values([15])
