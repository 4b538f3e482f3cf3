"""Test suite for the gauss package."""

from collections.abc import Sequence

__all__: Sequence[str] = ()

import cmath
import math
from typing import Final

import numpy as np
import pytest
import sympy

from exceptions import NotASquareDivisorError, NotSquareFreeModulusError
from gauss import (
    RATIO_IDENTITY_TOLERANCE,
    SINGLE_SUM_TOLERANCE,
    DichotomyReport,
    GaussSumMethod,
    GaussSumTable,
    ReductionReport,
    character_table,
    epsilon,
    gauss_closed_form,
    gauss_reduction_check,
    gauss_sum,
    gauss_table,
    square_divisors,
    symmetry_defects,
    verify_closed_form,
    verify_dichotomy,
    verify_reduction,
)


def _naive_gauss_sum(a: int, modulus: int) -> complex:
    return sum(
        int(sympy.jacobi_symbol(m, modulus)) * cmath.exp(2j * cmath.pi * a * m / modulus)
        for m in range(modulus)
    )


class TestGaussSum:
    """Test case to unit-test the direct evaluation of single Gauss sums."""

    @pytest.mark.parametrize(("a", "modulus"), ((1, 15), (2, 15), (7, 21), (4, 45), (9, 45)))
    def test_agrees_with_naive_summation(self, a: int, modulus: int) -> None:
        """Test that the vectorised sum agrees with a term-by-term summation."""
        assert abs(gauss_sum(a, modulus) - _naive_gauss_sum(a, modulus)) < 1e-9

    @pytest.mark.parametrize("a", (1, 2, 4, 7, 8, 11, 13, 14))
    def test_square_free_magnitude(self, a: int) -> None:
        """Test that every sum over a unit of 15 has magnitude √15."""
        assert abs(abs(gauss_sum(a, 15)) - math.sqrt(15)) < SINGLE_SUM_TOLERANCE

    @pytest.mark.parametrize("a", (1, 2, 4, 7, 44))
    def test_non_square_free_vanishes_on_units(self, a: int) -> None:
        """Test that every sum over a unit of 45 vanishes."""
        assert abs(gauss_sum(a, 45)) < SINGLE_SUM_TOLERANCE

    @staticmethod
    def test_argument_taken_modulo_n() -> None:
        """Test that a and a + N give the same sum."""
        assert abs(gauss_sum(2, 15) - gauss_sum(17, 15)) < SINGLE_SUM_TOLERANCE

    @staticmethod
    def test_perfect_square_g_zero_is_phi() -> None:
        """Test that G(0, χ) = φ(N) when N is a perfect square, where χ is principal."""
        assert abs(gauss_sum(0, 9) - 6) < SINGLE_SUM_TOLERANCE


class TestGaussTable:
    """Test case to unit-test full tables of Gauss sums."""

    @pytest.mark.parametrize("modulus", (3, 9, 15, 45, 63, 105, 225))
    def test_fft_matches_direct(self, modulus: int) -> None:
        """Test that the FFT route reproduces the direct route."""
        direct: GaussSumTable = gauss_table(modulus, GaussSumMethod.DIRECT)
        fft: GaussSumTable = gauss_table(modulus, GaussSumMethod.FFT)

        assert np.max(np.abs(direct.values - fft.values)) < 1e-9

    @pytest.mark.parametrize("modulus", (15, 45, 121))
    def test_parseval(self, modulus: int) -> None:
        """Test that Σ|G(a, χ)|² = N·φ(N)."""
        assert gauss_table(modulus).parseval_defect() < modulus * 1e-9

    @staticmethod
    def test_table_indexing() -> None:
        """Test that tables have N entries & are indexed modulo N."""
        table: GaussSumTable = gauss_table(21)

        assert len(table) == 21
        assert abs(table[5] - table[26]) < SINGLE_SUM_TOLERANCE
        assert abs(table[5] - gauss_sum(5, 21)) < SINGLE_SUM_TOLERANCE

    @staticmethod
    def test_tables_are_read_only() -> None:
        """Test that cached tables cannot be mutated by callers."""
        table: GaussSumTable = gauss_table(15)

        with pytest.raises(ValueError, match="read-only"):
            table.values[0] = 1

    @staticmethod
    def test_csv_columns() -> None:
        """Test that the CSV serialisation has one row per a & the expected header."""
        rows: list[str] = gauss_table(15).to_csv().splitlines()

        assert rows[0] == "a,re,im,gcd"
        assert len(rows) == 16
        assert rows[4].endswith(",3")

    @staticmethod
    def test_character_table() -> None:
        """Test that the character table holds χ_N(m) for every m."""
        assert character_table(15).tolist() == [
            int(sympy.jacobi_symbol(m, 15)) for m in range(15)
        ]


class TestIdentities:
    """Test case to unit-test the closed form & the symmetry identities."""

    @pytest.mark.parametrize(("modulus", "expected"), ((5, 1 + 0j), (15, 1j), (21, 1 + 0j)))
    def test_epsilon(self, modulus: int, expected: complex) -> None:
        """Test that ε_N is 1 for N ≡ 1 (mod 4) & i for N ≡ 3 (mod 4)."""
        assert epsilon(modulus) == expected

    @pytest.mark.parametrize("modulus", (3, 5, 15, 21, 105, 1155))
    def test_closed_form_holds_for_square_free(self, modulus: int) -> None:
        """Test that G(a, χ) = ε_N·χ(a)·√N for every a coprime to a square-free N."""
        assert verify_closed_form(modulus) < SINGLE_SUM_TOLERANCE * math.sqrt(modulus)

    @staticmethod
    def test_closed_form_rejects_non_square_free() -> None:
        """Test that the closed form refuses a modulus with a square factor."""
        with pytest.raises(NotSquareFreeModulusError):
            gauss_closed_form(1, 45)

    @pytest.mark.parametrize("modulus", (3, 9, 15, 45, 49, 63, 225))
    def test_symmetries(self, modulus: int) -> None:
        """Test that G(N - a) = conj(G(a)) = χ(-1)·G(a) & that G(0) vanishes off squares."""
        assert all(defect < 1e-9 for defect in symmetry_defects(modulus))


class TestReduction:
    """Test case to unit-test the z² reduction identity."""

    @staticmethod
    def test_square_divisors() -> None:
        """Test that every z with z² dividing N is listed."""
        assert square_divisors(45) == (1, 3)
        assert square_divisors(3969) == (1, 3, 7, 9, 21, 63)

    @pytest.mark.parametrize(("t", "z", "modulus"), ((1, 3, 45), (2, 3, 45), (1, 3, 9), (4, 3, 63)))  # noqa: E501
    def test_single_reductions(self, t: int, z: int, modulus: int) -> None:
        """Test that G(t·z², χ_N) = (φ(N)/φ(N/z²))·G(t, χ_(N/z²))."""
        assert gauss_reduction_check(t, z, modulus)

    @staticmethod
    def test_reduction_value_for_45() -> None:
        """Test that G(9, χ₄₅) = 6·G(1, χ₅) = 6·√5."""
        EXPECTED: Final[complex] = 6 * math.sqrt(5)

        assert abs(gauss_sum(9, 45) - EXPECTED) < RATIO_IDENTITY_TOLERANCE
        assert abs(gauss_sum(18, 45) + EXPECTED) < RATIO_IDENTITY_TOLERANCE

    @staticmethod
    def test_invalid_square_divisor() -> None:
        """Test that a z whose square does not divide N is rejected."""
        with pytest.raises(NotASquareDivisorError):
            gauss_reduction_check(1, 5, 45)

    @pytest.mark.parametrize("modulus", (9, 45, 63, 225, 375, 1125))
    def test_verify_reduction(self, modulus: int) -> None:
        """Test that the identity holds for every square divisor & every unit."""
        report: ReductionReport = verify_reduction(modulus)

        assert report.square_divisors == square_divisors(modulus)
        assert report.checked_pairs == len(report.square_divisors) * sympy.totient(modulus)
        assert report.passed()


class TestDichotomy:
    """Test case to unit-test the scan for the square-free dichotomy."""

    @staticmethod
    def test_square_free_modulus() -> None:
        """Test that 15 is recognised square-free & its units all have |G| = √15."""
        report: DichotomyReport = verify_dichotomy(15)

        assert report.square_free
        assert report.coprime_count == 8
        assert report.passed()

    @staticmethod
    def test_non_square_free_modulus() -> None:
        """Test that 45 is recognised non-square-free & its unit sums all vanish."""
        report: DichotomyReport = verify_dichotomy(45)

        assert not report.square_free
        assert report.coprime_count == 24
        assert report.passed()

    @staticmethod
    def test_every_odd_modulus_to_301() -> None:
        """Test that the dichotomy holds for every odd modulus up to 301."""
        assert all(verify_dichotomy(modulus).passed() for modulus in range(3, 302, 2))

    @staticmethod
    @pytest.mark.slow
    def test_every_odd_modulus_to_2001_using_fft() -> None:
        """Test that the dichotomy holds for every odd modulus up to 2001."""
        assert all(
            verify_dichotomy(modulus, GaussSumMethod.FFT).passed(1e-8)
            for modulus in range(3, 2002, 2)
        )
