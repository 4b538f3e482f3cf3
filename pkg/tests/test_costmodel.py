"""Test suite for the costmodel package."""

from collections.abc import Sequence

__all__: Sequence[str] = ()

import math
from typing import TYPE_CHECKING

import pytest

from costmodel import (
    MINIMUM_DIGITS,
    CostPoint,
    CurveLayout,
    cost_nfs,
    cost_ours,
    cost_points,
    cost_ratio,
    cost_shor,
    crossover_digits,
    emit_curves,
    plot_cost_curves,
    speedup_over_shor,
)
from exceptions import InvalidRunConfigError

if TYPE_CHECKING:
    from pathlib import Path


class TestCostFunctions:
    """Test case to unit-test the closed-form cost curves."""

    @staticmethod
    def test_known_values_at_50_digits() -> None:
        """Test the log₁₀ costs of Shor & the sieve at 50 digits."""
        assert cost_shor(50) == pytest.approx(7.05, abs=0.01)
        assert cost_nfs(50) == pytest.approx(11.47, abs=0.01)

    @staticmethod
    def test_expected_cost_formula() -> None:
        """Test that the expected curve is log₁₀ of L²·(ln L)²."""
        size: float = 100 * math.log(10)

        assert cost_ours(100) == pytest.approx(math.log10(size**2 * math.log(size) ** 2))
        assert cost_ours(100, worst=True) == pytest.approx(math.log10(size**3))

    @staticmethod
    def test_doubling_the_digits() -> None:
        """Test that the difference of two log₁₀ costs is the ratio of their operation counts."""  # noqa: E501
        small: float = 100 * math.log(10)
        large: float = 200 * math.log(10)
        expected: float = (large / small) ** 2 * (math.log(large) / math.log(small)) ** 2

        assert cost_ratio(cost_ours(200), cost_ours(100)) == pytest.approx(expected)
        assert 5 < cost_ratio(cost_ours(200), cost_ours(100)) < 5.2
        assert cost_ratio(cost_shor(100), cost_shor(100)) == 1

    @pytest.mark.parametrize("digits", (10, 50, 300, 1000))
    def test_curve_ordering(self, digits: int) -> None:
        """Test that the worst case is never cheaper than the expected case nor dearer than Shor."""  # noqa: E501
        assert cost_ours(digits) <= cost_ours(digits, worst=True) <= cost_shor(digits)

    @staticmethod
    def test_ordering_from_50_digits() -> None:
        """Test that the sieve is dearest & the expected curve cheapest from 50 digits on."""
        assert all(
            point.nfs > point.shor > point.ours_expected
            for point in cost_points(50, 1000)
        )

    @staticmethod
    def test_curves_are_increasing() -> None:
        """Test that every curve grows with the number of digits."""
        points: tuple[CostPoint, ...] = cost_points(MINIMUM_DIGITS, 1000)

        pair: tuple[CostPoint, CostPoint]
        for pair in zip(points, points[1:], strict=False):
            assert pair[0].ours_expected < pair[1].ours_expected
            assert pair[0].ours_worst < pair[1].ours_worst
            assert pair[0].shor < pair[1].shor
            assert pair[0].nfs < pair[1].nfs

    @staticmethod
    def test_speedup_grows_with_digits() -> None:
        """Test that the gap to Shor's curve widens as N grows."""
        speedups: list[float] = [speedup_over_shor(digits) for digits in (10, 100, 1000)]

        assert all(speedup > 0 for speedup in speedups)
        assert speedups == sorted(speedups)

    @staticmethod
    def test_nfs_does_not_overflow() -> None:
        """Test that the sieve stays finite far beyond the range of a float exponent."""
        assert math.isfinite(cost_nfs(100_000))

    @pytest.mark.parametrize("digits", (-1, 0, MINIMUM_DIGITS - 1))
    def test_too_few_digits_rejected(self, digits: int) -> None:
        """Test that digit counts below the minimum are rejected."""
        with pytest.raises(InvalidRunConfigError):
            cost_ours(digits)

    @pytest.mark.parametrize("constant", (0, -1.5))
    def test_non_positive_constant_rejected(self, constant: float) -> None:
        """Test that the sieve constant must be positive."""
        with pytest.raises(InvalidRunConfigError):
            cost_nfs(50, constant)


class TestCrossover:
    """Test case to unit-test the search for the sieve/Shor crossover."""

    @staticmethod
    def test_default_constant() -> None:
        """Test that the sieve stays costlier than Shor from a handful of digits."""
        crossover: int | None = crossover_digits()

        assert crossover is not None
        assert 4 < crossover <= 8

    @staticmethod
    def test_smaller_constant_moves_crossover() -> None:
        """Test that a cheaper sieve is overtaken later."""
        crossover: int | None = crossover_digits(1.5)

        assert crossover is not None
        assert 12 <= crossover <= 30
        assert all(cost_nfs(digits, 1.5) > cost_shor(digits) for digits in range(crossover, 200))  # noqa: E501

    @staticmethod
    def test_no_crossover_in_range() -> None:
        """Test that `None` is returned when the sieve is still cheaper at the top of the range."""  # noqa: E501
        assert crossover_digits(0.1) is None

    @staticmethod
    def test_tiny_range_rejected() -> None:
        """Test that the search range must hold at least the minimum digit count."""
        with pytest.raises(InvalidRunConfigError):
            crossover_digits(max_digits=1)


class TestCostPoints:
    """Test case to unit-test cost points & their serialisations."""

    @staticmethod
    def test_point_matches_functions() -> None:
        """Test that a cost point holds the value of every curve."""
        point: CostPoint = CostPoint.at(40)

        assert point.ours_expected == cost_ours(40)
        assert point.ours_worst == cost_ours(40, worst=True)
        assert point.shor == cost_shor(40)
        assert point.nfs == cost_nfs(40)
        assert point.to_dict()["digits"] == 40

    @staticmethod
    def test_full_range() -> None:
        """Test that every digit count from 2 to 1000 produces one point."""
        points: tuple[CostPoint, ...] = cost_points(MINIMUM_DIGITS, 1000)

        assert len(points) == 999
        assert points[0].digits == MINIMUM_DIGITS
        assert points[-1].digits == 1000

    @staticmethod
    def test_stepped_range() -> None:
        """Test that the step is honoured & the stop is inclusive."""
        assert [point.digits for point in cost_points(10, 50, 10)] == [10, 20, 30, 40, 50]

    @pytest.mark.parametrize(("start", "stop", "step"), ((1, 10, 1), (10, 5, 1), (2, 10, 0)))
    def test_invalid_range_rejected(self, start: int, stop: int, step: int) -> None:
        """Test that ranges below the minimum, reversed or with no step are rejected."""
        with pytest.raises(InvalidRunConfigError):
            cost_points(start, stop, step)

    @staticmethod
    def test_csv_layout() -> None:
        """Test that the CSV layout has a header & one comma-separated row per point."""
        rows: list[str] = emit_curves(cost_points(2, 11)).splitlines()

        assert rows[0] == "digits,ours_expected,ours_worst,shor,nfs"
        assert len(rows) == 11
        assert rows[1].startswith("2,")
        assert len(rows[1].split(",")) == 5

    @staticmethod
    def test_gnuplot_layout() -> None:
        """Test that the gnuplot layout comments out its header & separates by spaces."""
        rows: list[str] = emit_curves(cost_points(2, 4), CurveLayout.GNUPLOT).splitlines()

        assert rows[0] == "# digits ours_expected ours_worst shor nfs"
        assert len(rows) == 4
        assert len(rows[2].split(" ")) == 5


class TestPlot:
    """Test case to unit-test rendering the cost curves."""

    @staticmethod
    def test_png_written(tmp_path: "Path") -> None:
        """Test that a non-empty PNG file is saved at the requested path."""
        path: Path = plot_cost_curves(cost_points(2, 100, 7), tmp_path / "curves.png")

        assert path.exists()
        assert path.read_bytes().startswith(b"\x89PNG")

    @staticmethod
    def test_single_point_rejected(tmp_path: "Path") -> None:
        """Test that a curve needs at least two points."""
        with pytest.raises(InvalidRunConfigError):
            plot_cost_curves(cost_points(2, 2), tmp_path / "curves.png")
