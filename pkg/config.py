"""
Run-time settings of the toolkit: numerical limits, tolerances & the console log level.

Values are read lazily from the .env file at the project root or from the environment, and
are validated before any of them is stored.
"""

from collections.abc import Sequence

__all__: Sequence[str] = (
    "TRUE_VALUES",
    "FALSE_VALUES",
    "LOG_LEVEL_CHOICES",
    "DEFAULT_NFS_CONSTANT",
    "run_setup",
    "settings",
)

import abc
import logging
import os
import re
from logging import Logger
from pathlib import Path
from typing import Any, ClassVar, Final, final

import dotenv

from exceptions import ImproperlyConfiguredError

PROJECT_ROOT: Final[Path] = Path(__file__).parent.resolve()

TRUE_VALUES: Final[frozenset[str]] = frozenset({"true", "1", "t", "y", "yes", "on"})
FALSE_VALUES: Final[frozenset[str]] = frozenset({"false", "0", "f", "n", "no", "off"})
LOG_LEVEL_CHOICES: Final[Sequence[str]] = (
    "DEBUG",
    "INFO",
    "WARNING",
    "ERROR",
    "CRITICAL"
)
DEFAULT_NFS_CONSTANT: Final[float] = (64 / 9) ** (1 / 3)

logger: Logger = logging.getLogger("gauss-squarefree")


class Settings(abc.ABC):
    """
    Lazily loaded & validated settings of the toolkit.

    Values are read by key, as in `settings["EXHAUSTIVE_LIMIT"]`, or as attributes.
    """

    _is_env_variables_setup: ClassVar[bool]
    _settings: ClassVar[dict[str, object]]

    @classmethod
    def get_invalid_settings_key_message(cls, item: str) -> str:
        """Return the message to state that the given settings key is invalid."""
        return f"{item!r} is not a valid settings key."

    def __getattr__(self, item: str) -> Any:  # type: ignore[misc]
        """Retrieve settings value by attribute lookup."""
        MISSING_ATTRIBUTE_MESSAGE: Final[str] = (
            f"{type(self).__name__!r} object has no attribute {item!r}"
        )

        # NOTE: pytest probes unknown attributes while collecting & must see them missing
        if "_pytest" in item or item in ("__bases__", "__test__"):
            raise AttributeError(MISSING_ATTRIBUTE_MESSAGE)

        if not self._is_env_variables_setup:
            self._setup_env_variables()

        if item in self._settings:
            return self._settings[item]

        if re.match(r"\A[A-Z](?:[A-Z_]*[A-Z])?\Z", item):
            INVALID_SETTINGS_KEY_MESSAGE: Final[str] = self.get_invalid_settings_key_message(
                item
            )
            raise AttributeError(INVALID_SETTINGS_KEY_MESSAGE)

        raise AttributeError(MISSING_ATTRIBUTE_MESSAGE)

    def __getitem__(self, item: str) -> Any:  # type: ignore[misc]
        """Retrieve settings value by key lookup."""
        e: AttributeError
        try:
            return getattr(self, item)
        except AttributeError as e:
            key_error_message: str = item

            if self.get_invalid_settings_key_message(item) in str(e):
                key_error_message = str(e)

            raise KeyError(key_error_message) from None

    @staticmethod
    def _setup_logging() -> None:
        raw_console_log_level: str = str(os.getenv("CONSOLE_LOG_LEVEL", "WARNING")).upper()

        if raw_console_log_level not in LOG_LEVEL_CHOICES:
            INVALID_LOG_LEVEL_MESSAGE: Final[str] = f"""CONSOLE_LOG_LEVEL must be one of {
                ",".join(f"{log_level_choice!r}"
                    for log_level_choice
                    in LOG_LEVEL_CHOICES[:-1])
                } or {LOG_LEVEL_CHOICES[-1]!r}."""
            raise ImproperlyConfiguredError(INVALID_LOG_LEVEL_MESSAGE)

        logger.setLevel(getattr(logging, raw_console_log_level))

        if not logger.handlers:
            console_logging_handler: logging.Handler = logging.StreamHandler()
            # noinspection SpellCheckingInspection
            console_logging_handler.setFormatter(
                logging.Formatter("{asctime} | {name} | {levelname:^8} - {message}", style="{")
            )

            logger.addHandler(console_logging_handler)

        logger.propagate = False

    @classmethod
    def _setup_exhaustive_limit(cls) -> None:
        INVALID_EXHAUSTIVE_LIMIT_MESSAGE: Final[str] = (
            "EXHAUSTIVE_LIMIT must be an integer of at least 3."
        )

        e: ValueError
        try:
            raw_exhaustive_limit: int = int(os.getenv("EXHAUSTIVE_LIMIT", "10000"))
        except ValueError as e:
            raise ImproperlyConfiguredError(INVALID_EXHAUSTIVE_LIMIT_MESSAGE) from e

        if raw_exhaustive_limit < 3:
            raise ImproperlyConfiguredError(INVALID_EXHAUSTIVE_LIMIT_MESSAGE)

        cls._settings["EXHAUSTIVE_LIMIT"] = raw_exhaustive_limit

    @classmethod
    def _setup_circuit_verify_max_width(cls) -> None:
        INVALID_CIRCUIT_VERIFY_MAX_WIDTH_MESSAGE: Final[str] = (
            "CIRCUIT_VERIFY_MAX_WIDTH must be an integer between & including 1 & 30."
        )

        e: ValueError
        try:
            raw_circuit_verify_max_width: int = int(
                os.getenv("CIRCUIT_VERIFY_MAX_WIDTH", "24")
            )
        except ValueError as e:
            raise ImproperlyConfiguredError(INVALID_CIRCUIT_VERIFY_MAX_WIDTH_MESSAGE) from e

        if not 1 <= raw_circuit_verify_max_width <= 30:
            raise ImproperlyConfiguredError(INVALID_CIRCUIT_VERIFY_MAX_WIDTH_MESSAGE)

        cls._settings["CIRCUIT_VERIFY_MAX_WIDTH"] = raw_circuit_verify_max_width

    @classmethod
    def _setup_early_termination(cls) -> None:
        raw_early_termination: str = str(os.getenv("EARLY_TERMINATION", "True")).lower()

        if raw_early_termination not in TRUE_VALUES | FALSE_VALUES:
            INVALID_EARLY_TERMINATION_MESSAGE: Final[str] = (
                "EARLY_TERMINATION must be a boolean value."
            )
            raise ImproperlyConfiguredError(INVALID_EARLY_TERMINATION_MESSAGE)

        cls._settings["EARLY_TERMINATION"] = raw_early_termination in TRUE_VALUES

    @classmethod
    def _setup_small_prime_limit(cls) -> None:
        INVALID_SMALL_PRIME_LIMIT_MESSAGE: Final[str] = (
            "SMALL_PRIME_LIMIT must be a positive integer."
        )

        e: ValueError
        try:
            raw_small_prime_limit: int = int(os.getenv("SMALL_PRIME_LIMIT", "7"))
        except ValueError as e:
            raise ImproperlyConfiguredError(INVALID_SMALL_PRIME_LIMIT_MESSAGE) from e

        if raw_small_prime_limit < 1:
            raise ImproperlyConfiguredError(INVALID_SMALL_PRIME_LIMIT_MESSAGE)

        cls._settings["SMALL_PRIME_LIMIT"] = raw_small_prime_limit

    @classmethod
    def _setup_nfs_constant(cls) -> None:
        INVALID_NFS_CONSTANT_MESSAGE: Final[str] = (
            "NFS_CONSTANT must be a positive real number."
        )

        e: ValueError
        try:
            raw_nfs_constant: float = float(
                os.getenv("NFS_CONSTANT", str(DEFAULT_NFS_CONSTANT))
            )
        except ValueError as e:
            raise ImproperlyConfiguredError(INVALID_NFS_CONSTANT_MESSAGE) from e

        if not 0 < raw_nfs_constant < float("inf"):
            raise ImproperlyConfiguredError(INVALID_NFS_CONSTANT_MESSAGE)

        cls._settings["NFS_CONSTANT"] = raw_nfs_constant

    @classmethod
    def _setup_probability_cutoff(cls) -> None:
        INVALID_PROBABILITY_CUTOFF_MESSAGE: Final[str] = (
            "PROBABILITY_CUTOFF must be a real number greater than 0 and at most 1e-6."
        )

        e: ValueError
        try:
            raw_probability_cutoff: float = float(os.getenv("PROBABILITY_CUTOFF", "1e-15"))
        except ValueError as e:
            raise ImproperlyConfiguredError(INVALID_PROBABILITY_CUTOFF_MESSAGE) from e

        if not 0 < raw_probability_cutoff <= 1e-6:
            raise ImproperlyConfiguredError(INVALID_PROBABILITY_CUTOFF_MESSAGE)

        cls._settings["PROBABILITY_CUTOFF"] = raw_probability_cutoff

    @classmethod
    def _setup_env_variables(cls) -> None:
        """Validate every setting from the .env file/the environment & store the results."""
        if cls._is_env_variables_setup:
            logger.warning("Settings have already been loaded.")
            return

        dotenv.load_dotenv(PROJECT_ROOT / ".env")

        cls._setup_logging()
        cls._setup_exhaustive_limit()
        cls._setup_circuit_verify_max_width()
        cls._setup_early_termination()
        cls._setup_small_prime_limit()
        cls._setup_nfs_constant()
        cls._setup_probability_cutoff()

        cls._is_env_variables_setup = True


def _settings_class_factory() -> type[Settings]:
    @final
    class RuntimeSettings(Settings):
        """The single concrete settings class, holding the loaded values."""

        _is_env_variables_setup: ClassVar[bool] = False
        _settings: ClassVar[dict[str, object]] = {}

    return RuntimeSettings


settings: Final[Settings] = _settings_class_factory()()


def run_setup() -> None:
    """Execute the setup functions required, before any command can be dispatched."""
    if settings._is_env_variables_setup:  # noqa: SLF001
        return

    # noinspection PyProtectedMember
    settings._setup_env_variables()  # noqa: SLF001

    logger.debug("Settings loaded")
