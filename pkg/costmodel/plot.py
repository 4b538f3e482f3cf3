"""Rendering of the cost curves as a PNG figure."""

from collections.abc import Sequence

__all__: Sequence[str] = ("plot_cost_curves",)

import logging
from logging import Logger
from typing import TYPE_CHECKING, Final

import matplotlib.pyplot as plt
import mplcyberpunk

from exceptions import InvalidRunConfigError

if TYPE_CHECKING:
    from pathlib import Path

    from matplotlib.text import Text as Plot_Text

    from costmodel.curves import CostPoint

logger: Logger = logging.getLogger("gauss-squarefree")


def plot_cost_curves(points: Sequence["CostPoint"], path: "Path", title: str = "Cost of learning the square-free decomposition") -> "Path":  # noqa: E501
    """Draw every log₁₀ cost curve against the number of digits & save it as a PNG."""
    if len(points) < 2:
        TOO_FEW_POINTS_MESSAGE: Final[str] = (
            f"At least two cost points are needed to draw a curve, not {len(points)}."
        )
        raise InvalidRunConfigError(TOO_FEW_POINTS_MESSAGE)

    plt.style.use("cyberpunk")

    digits: list[int] = [point.digits for point in points]

    plt.plot(digits, [point.nfs for point in points], label="Number field sieve")
    plt.plot(digits, [point.shor for point in points], label="Shor")
    plt.plot(digits, [point.ours_worst for point in points], label="Gauss sums (worst)")
    plt.plot(digits, [point.ours_expected for point in points], label="Gauss sums (expected)")

    mplcyberpunk.add_glow_effects()

    plt.xlabel("Decimal digits of N", fontweight="bold", fontsize="large")
    plt.ylabel("log₁₀ operations", fontweight="bold", fontsize="large")

    title_obj: Plot_Text = plt.title(title, fontsize="x-large", wrap=True)
    title_obj._get_wrap_line_width = lambda: 500  # type: ignore[attr-defined]

    plt.legend()
    plt.savefig(path, format="png")
    plt.close()

    logger.debug("Saved cost curves over %d points to %s", len(points), path)

    return path
