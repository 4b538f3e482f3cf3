"""Custom exception classes that could be raised within the simulation & verification modules."""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "ImproperlyConfiguredError",
    "BaseSquareFreeError",
    "BaseErrorWithErrorCode",
    "NotANaturalNumberError",
    "InvalidModulusError",
    "NotPrimeModulusError",
    "NotSquareFreeModulusError",
    "NotASquareDivisorError",
    "NotADivisorError",
    "LoopBoundExceededError",
    "QuantumStateError",
    "NonCoprimeSupportError",
    "UnnormalisedStateError",
    "ExhaustiveLimitExceededError",
    "MalformedGateError",
    "CircuitTooWideError",
    "BitWidthOutOfRangeError",
    "InconsistentTracesError",
    "InvalidRunConfigError",
)

import abc

from classproperties import classproperty


class ImproperlyConfiguredError(Exception):
    """Exception class to raise when environment variables are not correctly provided."""


class BaseSquareFreeError(BaseException, abc.ABC):
    """Base exception parent class."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    @abc.abstractmethod
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401

    def __init__(self, message: str | None = None) -> None:
        """Initialize a new exception with the given error message."""
        self.message: str = message or self.DEFAULT_MESSAGE

        super().__init__(self.message)

    def __repr__(self) -> str:
        """Generate a developer-focused representation of the exception's attributes."""
        formatted: str = self.message

        attributes: dict[str, object] = dict(self.__dict__)
        attributes.pop("message")
        if attributes:
            formatted += f""" ({
                ", ".join(
                    f"{attribute_name}={attribute_value!r}"
                    for attribute_name, attribute_value
                    in sorted(attributes.items())
                )
            })"""

        return formatted


class BaseErrorWithErrorCode(BaseSquareFreeError, abc.ABC):
    """Base class for exception errors that have an error code."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    @abc.abstractmethod
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401


class NotANaturalNumberError(BaseErrorWithErrorCode, ValueError):
    """Exception class to raise when an operand is negative."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "Operands must be non-negative integers."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2001"

    def __init__(self, message: str | None = None, value: int | None = None) -> None:
        """Initialize a new NotANaturalNumberError, storing the offending value."""
        self.value: int | None = value

        super().__init__(message)


class InvalidModulusError(BaseErrorWithErrorCode, ValueError):
    """Exception class to raise when a modulus is even, too small or otherwise unusable."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "The modulus must be an odd integer of at least 3."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2002"

    def __init__(self, message: str | None = None, modulus: int | None = None) -> None:
        """Initialize a new InvalidModulusError, storing the rejected modulus."""
        self.modulus: int | None = modulus

        super().__init__(message)


class NotPrimeModulusError(InvalidModulusError):
    """Exception class to raise when a Legendre symbol is requested for a composite modulus."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "The modulus of a Legendre symbol must be an odd prime."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2003"


class NotSquareFreeModulusError(InvalidModulusError):
    """Exception class to raise when a closed form needing a square-free modulus is misused."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "The modulus must be square-free."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2004"


class NotASquareDivisorError(BaseErrorWithErrorCode, ValueError):
    """Exception class to raise when z² does not divide the modulus of a reduction check."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "The given square does not divide the modulus."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2005"


class NotADivisorError(BaseErrorWithErrorCode, ValueError):
    """Exception class to raise when a factor handed to the recursion does not divide it."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "The given factor is not a proper divisor of the argument."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2006"


class LoopBoundExceededError(BaseErrorWithErrorCode, RuntimeError):
    """Exception class to raise when a bounded binary loop fails to terminate in time."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "A binary shift-and-subtract loop exceeded its static round bound."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2007"


class QuantumStateError(BaseErrorWithErrorCode, ValueError, abc.ABC):
    """Exception class to raise when a statevector violates the precondition of an operation."""


class NonCoprimeSupportError(QuantumStateError):
    """Exception class to raise when the phase oracle is applied to a non-coprime branch."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return (
            "The character phase oracle is only unitary on basis states coprime to the modulus."
        )

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2008"


class UnnormalisedStateError(QuantumStateError):
    """Exception class to raise when a statevector has drifted away from unit norm."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "The statevector is not normalised."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2009"


class ExhaustiveLimitExceededError(BaseErrorWithErrorCode, ValueError):
    """Exception class to raise when a full enumeration is requested above the desk limit."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "The modulus is too large for exhaustive enumeration."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2010"


class MalformedGateError(BaseErrorWithErrorCode, ValueError):
    """Exception class to raise when a reversible gate addresses its bits inconsistently."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "Gate controls & targets must be distinct in-range bit addresses."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2011"


class CircuitTooWideError(BaseErrorWithErrorCode, ValueError):
    """Exception class to raise when an exhaustive image check would be infeasible."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "The circuit is too wide for an exhaustive permutation check."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2012"


class BitWidthOutOfRangeError(BaseErrorWithErrorCode, ValueError):
    """Exception class to raise when a circuit builder is asked for an unsupported width."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "The register bit-width is outside the supported construction range."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2013"


class InconsistentTracesError(BaseErrorWithErrorCode, RuntimeError):
    """Exception class to raise when two recursion traces disagree on the decomposition."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "Different measurement outcomes led to different decompositions."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2014"


class InvalidRunConfigError(BaseErrorWithErrorCode, ValueError):
    """Exception class to raise when command-line operands fail their range checks."""

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def DEFAULT_MESSAGE(cls) -> str:  # noqa: N802,N805
        """The message to be displayed alongside this exception class if none is provided."""  # noqa: D401
        return "The given command-line operands are invalid."

    # noinspection PyMethodParameters,PyPep8Naming
    @classproperty
    def ERROR_CODE(cls) -> str:  # noqa: N802,N805
        """The unique error code for identifying which domain check failed."""  # noqa: D401
        return "E2015"
