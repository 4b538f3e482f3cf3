"""Exact arithmetic-level statevector simulation of the Ω subroutine."""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "CIRCUIT_ORACLE_MODULUS_LIMIT",
    "DISTRIBUTION_TOLERANCE",
    "NORM_TOLERANCE",
    "ArithmeticOracle",
    "CircuitOracle",
    "ClassicalOracle",
    "MeasurementDistribution",
    "OmegaBranch",
    "OmegaMode",
    "OmegaOutcome",
    "OmegaOutcomeKind",
    "OmegaOutcomeSet",
    "OracleKind",
    "Statevector",
    "TraceEvent",
    "apply_inverse_qft",
    "apply_qft",
    "apply_u1",
    "apply_u2",
    "derived_seed",
    "make_oracle",
    "measure_m1",
    "measure_m2",
    "measurement_generator",
    "omega",
    "omega_exhaustive",
    "omega_sample",
    "prepare_uniform",
)


from qsim.measurement import (
    DISTRIBUTION_TOLERANCE,
    MeasurementDistribution,
    derived_seed,
    measurement_generator,
)
from qsim.omega import (
    OmegaBranch,
    OmegaMode,
    OmegaOutcome,
    OmegaOutcomeKind,
    OmegaOutcomeSet,
    omega,
    omega_exhaustive,
    omega_sample,
)
from qsim.oracles import (
    CIRCUIT_ORACLE_MODULUS_LIMIT,
    ArithmeticOracle,
    CircuitOracle,
    ClassicalOracle,
    OracleKind,
    make_oracle,
)
from qsim.pipeline import (
    apply_inverse_qft,
    apply_qft,
    apply_u1,
    apply_u2,
    measure_m1,
    measure_m2,
    prepare_uniform,
)
from qsim.statevector import NORM_TOLERANCE, Statevector, TraceEvent
