"""
The recursive square-free decomposition driven by Ω.

Every Ω outcome either certifies its argument square-free, reveals the square part directly
(when M₂ returns a perfect square gcd), or supplies a factor c that splits the argument N
into the coprime arguments c/d & N/(c·d) with d = gcd(c, N/c), whose results are combined
with the square factor d².
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "DecompositionTrace",
    "NodeReason",
    "SplitResult",
    "TraceCoverage",
    "combine",
    "decompose",
    "explore_all_traces",
    "rounds_to_square_part",
    "split",
)

import functools
import itertools
import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
from logging import Logger
from typing import Final

from config import settings
from exceptions import InconsistentTracesError, NotADivisorError, NotANaturalNumberError
from numtheory import (
    SquareFreeDecomposition,
    binary_gcd,
    is_perfect_square,
    is_prime_by_trial_division,
    lift_even,
    strip_even,
)
from qsim import (
    OmegaBranch,
    OmegaMode,
    OmegaOutcome,
    OmegaOutcomeKind,
    OmegaOutcomeSet,
    OracleKind,
    derived_seed,
    omega_exhaustive,
    omega_sample,
)

logger: Logger = logging.getLogger("gauss-squarefree")


class NodeReason(StrEnum):
    """Why a node of the decomposition trace has the result it has."""

    TRIVIAL = "trivial"
    SMALL_PRIME = "small_prime"
    EVEN_PART = "even_part"
    OMEGA = "omega"


@dataclass(frozen=True, slots=True)
class SplitResult:
    """The coprime arguments c/d & N/(c·d) produced by a factor c of N, with d = gcd(c, N/c)."""  # noqa: E501

    d: int
    a1: int
    a2: int


def split(c: int, modulus: int) -> SplitResult:
    """Split N along its nontrivial divisor c."""
    if not 1 < c < modulus or modulus % c:
        NOT_A_DIVISOR_MESSAGE: Final[str] = (
            f"{c} is not a nontrivial divisor of {modulus}."
        )
        raise NotADivisorError(NOT_A_DIVISOR_MESSAGE)

    d: int = binary_gcd(c, modulus // c)

    return SplitResult(d=d, a1=c // d, a2=modulus // (c * d))


def combine(parts: Sequence[SquareFreeDecomposition], d: int) -> SquareFreeDecomposition:
    """Combine the decompositions of coprime arguments with the square factor d²."""
    return SquareFreeDecomposition(
        r=math.prod(part.r for part in parts),
        s=math.prod(part.s for part in parts) * d,
    )


@dataclass(frozen=True, slots=True)
class DecompositionTrace:
    """
    One node of the recursion tree, with the result for its argument.

    `d` is the square root of the square factor collected at this node: the gcd used to
    split, the square root of a square part returned by M₂, or 1. For the even-part root,
    `two_exponent` is the power of two stripped before recursing on the odd core.
    """

    argument: int
    result: SquareFreeDecomposition
    reason: NodeReason
    outcome: OmegaOutcome | None = None
    d: int = 1
    two_exponent: int = 0
    children: tuple["DecompositionTrace", ...] = ()

    def walk(self) -> Iterator["DecompositionTrace"]:
        """Yield every node of this subtree in depth-first pre-order."""
        yield self

        child: DecompositionTrace
        for child in self.children:
            yield from child.walk()

    def depth(self) -> int:
        return 1 + max((child.depth() for child in self.children), default=0)

    def omega_calls(self) -> int:
        """Return the number of nodes of this subtree that ran Ω."""
        return sum(1 for node in self.walk() if node.outcome is not None)

    def reconstructs(self) -> bool:
        """
        Return whether every internal node is reconstructed by its children.

        An Ω node needs the product of its children's arguments times d² to equal its own
        argument; the even-part node needs its child times 2 to the stripped exponent.
        """
        node: DecompositionTrace
        for node in self.walk():
            if not node.children:
                if node.argument != node.result.value:
                    return False
                continue

            product: int = math.prod(child.argument for child in node.children)
            expected: int = (
                product << node.two_exponent
                if node.reason == NodeReason.EVEN_PART
                else product * node.d * node.d
            )
            if expected != node.argument:
                return False

        return True

    def to_dict(self) -> dict[str, object]:
        """Serialise the tree as a flat list of nodes referring to their children by id."""
        ids: dict[int, int] = {}
        counter: Iterator[int] = itertools.count()

        node: DecompositionTrace
        for node in self.walk():
            ids[id(node)] = next(counter)

        return {
            "nodes": [
                {
                    "id": ids[id(node)],
                    "argument": node.argument,
                    "reason": node.reason.value,
                    "outcome": node.outcome.kind.value if node.outcome else None,
                    "factor": node.outcome.factor if node.outcome else None,
                    "m2_outcome": node.outcome.m2_value if node.outcome else None,
                    "d": node.d,
                    "two_exponent": node.two_exponent,
                    "r": node.result.r,
                    "s": node.result.s,
                    "children": [ids[id(child)] for child in node.children],
                }
                for node in self.walk()
            ],
        }


def _reduce(argument: int, kind: OmegaOutcomeKind, factor: int | None, early_termination: bool) -> SquareFreeDecomposition | tuple[tuple[int, ...], int]:  # noqa: E501
    """
    Return the leaf result of an Ω outcome, or the child arguments & d it reduces to.

    A factor equal to the argument only comes from M₂ returning 0, which makes the argument
    a perfect square & therefore its own square part.
    """
    if kind == OmegaOutcomeKind.SQUARE_FREE_CERTIFICATE or factor is None:
        return SquareFreeDecomposition(r=argument, s=1)

    if factor == argument:
        return SquareFreeDecomposition(r=1, s=math.isqrt(argument))

    if early_termination and kind == OmegaOutcomeKind.FACTOR_AT_M2 and is_perfect_square(factor):  # noqa: E501
        return (argument // factor,), math.isqrt(factor)

    split_result: SplitResult = split(factor, argument)

    return (split_result.a1, split_result.a2), split_result.d


def _shortcut(argument: int) -> DecompositionTrace | None:
    if argument == 1:
        return DecompositionTrace(
            argument=1,
            result=SquareFreeDecomposition(r=1, s=1),
            reason=NodeReason.TRIVIAL,
        )

    if argument <= settings["SMALL_PRIME_LIMIT"] and is_prime_by_trial_division(argument):
        return DecompositionTrace(
            argument=argument,
            result=SquareFreeDecomposition(r=argument, s=1),
            reason=NodeReason.SMALL_PRIME,
        )

    return None


class _TraceBuilder:
    """Builds the recursion tree below one argument, sampling or following likeliest outcomes."""  # noqa: E501

    def __init__(self, seed: int, early_termination: bool, oracle: OracleKind, *, exhaustive: bool) -> None:  # noqa: E501
        self.seed: int = seed
        self.early_termination: bool = early_termination
        self.oracle: OracleKind = oracle
        self.exhaustive: bool = exhaustive

    def _child(self, argument: int, branch: int) -> DecompositionTrace:
        return _TraceBuilder(
            derived_seed(self.seed, branch),
            self.early_termination,
            self.oracle,
            exhaustive=self.exhaustive,
        ).trace(argument)

    def trace(self, argument: int) -> DecompositionTrace:
        shortcut: DecompositionTrace | None = _shortcut(argument)
        if shortcut is not None:
            return shortcut

        outcome: OmegaOutcome = (
            _representative_outcome(omega_exhaustive(argument, self.oracle))
            if self.exhaustive
            else omega_sample(argument, self.seed, self.oracle)
        )
        logger.debug(
            "Ω on %d returned %s with factor %s",
            argument,
            outcome.kind,
            outcome.factor,
        )

        reduction: SquareFreeDecomposition | tuple[tuple[int, ...], int] = _reduce(
            argument,
            outcome.kind,
            outcome.factor,
            self.early_termination,
        )

        if isinstance(reduction, SquareFreeDecomposition):
            return DecompositionTrace(
                argument=argument,
                result=reduction,
                reason=NodeReason.OMEGA,
                outcome=outcome,
            )

        child_arguments: tuple[int, ...]
        d: int
        child_arguments, d = reduction

        children: tuple[DecompositionTrace, ...] = tuple(
            self._child(child_argument, branch)
            for branch, child_argument in enumerate(child_arguments)
        )

        return DecompositionTrace(
            argument=argument,
            result=combine([child.result for child in children], d),
            reason=NodeReason.OMEGA,
            outcome=outcome,
            d=d,
            children=children,
        )


def _representative_outcome(outcome_set: OmegaOutcomeSet) -> OmegaOutcome:
    most_likely: OmegaBranch = max(outcome_set.branches, key=lambda branch: branch.probability)

    return OmegaOutcome(
        modulus=outcome_set.modulus,
        kind=most_likely.kind,
        m1_value=most_likely.m1_value,
        factor=most_likely.factor,
        m2_value=most_likely.m2_values[0] if most_likely.m2_values else None,
        m1_distribution=outcome_set.m1_distribution,
        m2_distribution=outcome_set.m2_distribution if most_likely.m2_values else None,
    )


@dataclass(frozen=True, slots=True)
class TraceCoverage:
    """The outcome of exploring every nonzero-probability Ω outcome below an argument."""

    argument: int
    decomposition: SquareFreeDecomposition
    arguments_explored: int
    branches_explored: int

    def to_dict(self) -> dict[str, object]:
        return {
            "argument": self.argument,
            "decomposition": self.decomposition.to_dict(),
            "arguments_explored": self.arguments_explored,
            "branches_explored": self.branches_explored,
        }


@functools.lru_cache(maxsize=16384)
def _all_traces_result(argument: int, early_termination: bool, oracle: OracleKind) -> tuple[SquareFreeDecomposition, frozenset[int], int]:  # noqa: E501
    shortcut: DecompositionTrace | None = _shortcut(argument)
    if shortcut is not None:
        return shortcut.result, frozenset({argument}), 0

    results: set[SquareFreeDecomposition] = set()
    explored: set[int] = {argument}
    branch_count: int = 0

    branch: OmegaBranch
    for branch in omega_exhaustive(argument, oracle).branches:
        branch_count += 1
        reduction: SquareFreeDecomposition | tuple[tuple[int, ...], int] = _reduce(
            argument,
            branch.kind,
            branch.factor,
            early_termination,
        )

        if isinstance(reduction, SquareFreeDecomposition):
            results.add(reduction)
            continue

        child_results: list[SquareFreeDecomposition] = []

        child_argument: int
        for child_argument in reduction[0]:
            child_result: SquareFreeDecomposition
            child_explored: frozenset[int]
            child_branches: int
            child_result, child_explored, child_branches = _all_traces_result(
                child_argument,
                early_termination,
                oracle,
            )
            child_results.append(child_result)
            explored |= child_explored
            branch_count += child_branches

        results.add(combine(child_results, reduction[1]))

    if len(results) != 1:
        INCONSISTENT_TRACES_MESSAGE: Final[str] = (
            f"Ω outcomes for {argument} lead to different decompositions: "
            f"{sorted((result.r, result.s) for result in results)!r}."
        )
        raise InconsistentTracesError(INCONSISTENT_TRACES_MESSAGE)

    return results.pop(), frozenset(explored), branch_count


def explore_all_traces(argument: int, early_termination: bool | None = None, oracle: OracleKind = OracleKind.CLASSICAL) -> TraceCoverage:  # noqa: E501
    """
    Follow every nonzero-probability Ω outcome below the odd core of `argument`.

    Raises `InconsistentTracesError` if two traces reach different decompositions. Results
    are memoised per argument, so shared subproblems are explored once.
    """
    core: int
    two_exponent: int
    core, two_exponent = strip_even(argument)

    early: bool = (
        settings["EARLY_TERMINATION"] if early_termination is None else early_termination
    )

    core_result: SquareFreeDecomposition
    explored: frozenset[int]
    branch_count: int
    core_result, explored, branch_count = _all_traces_result(core, early, oracle)

    return TraceCoverage(
        argument=argument,
        decomposition=lift_even(core_result, two_exponent),
        arguments_explored=len(explored),
        branches_explored=branch_count,
    )


def decompose(argument: int, mode: OmegaMode = OmegaMode.SAMPLE, seed: int = 0, early_termination: bool | None = None, oracle: OracleKind = OracleKind.CLASSICAL) -> tuple[SquareFreeDecomposition, DecompositionTrace]:  # noqa: E501
    """
    Return the square-free decomposition of `argument` & the recursion trace that found it.

    The power of two is stripped classically first. In sample mode every Ω call draws from
    its own stream, seeded from `seed` & the branch path. In exhaustive mode every trace is
    checked to agree first & the returned trace follows the most probable outcome class at
    every node.
    """
    if argument < 1:
        NOT_POSITIVE_MESSAGE: Final[str] = f"Cannot decompose {argument}: it is not positive."
        raise NotANaturalNumberError(NOT_POSITIVE_MESSAGE, value=argument)

    early: bool = (
        settings["EARLY_TERMINATION"] if early_termination is None else early_termination
    )
    exhaustive: bool = mode == OmegaMode.EXHAUSTIVE

    if exhaustive:
        explore_all_traces(argument, early, oracle)

    core: int
    two_exponent: int
    core, two_exponent = strip_even(argument)

    core_trace: DecompositionTrace = _TraceBuilder(
        seed,
        early,
        oracle,
        exhaustive=exhaustive,
    ).trace(core)

    trace: DecompositionTrace = (
        DecompositionTrace(
            argument=argument,
            result=lift_even(core_trace.result, two_exponent),
            reason=NodeReason.EVEN_PART,
            two_exponent=two_exponent,
            children=(core_trace,),
        )
        if two_exponent
        else core_trace
    )

    logger.debug(
        "Decomposed %d as %d·%d² using %d Ω calls",
        argument,
        trace.result.r,
        trace.result.s,
        trace.omega_calls(),
    )

    return trace.result, trace


def rounds_to_square_part(trace: DecompositionTrace) -> int:
    """
    Return the number of Ω levels until every branch of the trace learnt its square part.

    A branch has learnt it once Ω certified it square-free or returned its square part; a
    split needs one more level than its slowest child.
    """
    if trace.outcome is None:
        return max((rounds_to_square_part(child) for child in trace.children), default=0)

    if not trace.children or (
        trace.outcome.kind == OmegaOutcomeKind.FACTOR_AT_M2
        and trace.outcome.factor is not None
        and is_perfect_square(trace.outcome.factor)
        and len(trace.children) == 1
    ):
        return 1

    return 1 + max(rounds_to_square_part(child) for child in trace.children)
