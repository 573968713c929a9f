import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from bessel_dirichlet import DomainError, ZeroTable, bessel_j, mcmahon_guess, refine_zero, zero_table
from bessel_dirichlet.bessel_kernel import Order


def test_first_zeros_of_j0_against_bisection():
    table = zero_table(0, 5)
    assert table.zeros[0] == pytest.approx(2.404825557695773, abs=1e-11)
    for z in table.zeros:
        assert z == pytest.approx(oracles.zero(0, z - 0.1, z + 0.1), abs=1e-12)


@pytest.mark.parametrize("nu", [-0.95, -0.3, 0.0, 1.0, 2.7, 15.0])
def test_zeros_against_oracle(nu):
    table = zero_table(nu, 40)
    for z in table.zeros[[0, 1, 9, 39]]:
        assert z == pytest.approx(oracles.zero(nu, z - 0.05, z + 0.05), abs=1e-12 * max(1.0, z))


def test_half_integer_orders_are_sines_and_cosines():
    n = np.arange(1, 101)
    assert np.max(np.abs(zero_table(0.5, 100).zeros - n * math.pi)) <= 1e-12
    assert np.max(np.abs(zero_table(-0.5, 100).zeros - (n - 0.5) * math.pi)) <= 1e-12


def test_large_tables_stay_ordered_and_accurate():
    table = zero_table(1.0, 20000)
    assert np.all(np.diff(table.zeros) > 0)
    z = table.zeros[-1]
    assert z == pytest.approx(oracles.zero(1.0, z - 0.05, z + 0.05), abs=1e-12 * z)


@given(st.floats(min_value=-0.99, max_value=30.0))
def test_spacing_at_least_gap_factor(nu):
    # consecutive gaps exceed 0.98 pi past the first zero
    zeros = zero_table(nu, 200).zeros
    assert np.min(np.diff(zeros)) >= 0.98 * math.pi


@given(st.floats(min_value=-0.99, max_value=30.0), st.integers(min_value=1, max_value=60))
def test_residuals_small(nu, count):
    table = zero_table(nu, count)
    assert table.residual_bound <= 1e-12
    assert len(table) == count
    assert table.zeros[0] > 0


@given(st.floats(min_value=-0.99, max_value=20.0))
def test_interlacing(nu):
    a = zero_table(nu, 30).zeros
    b = zero_table(nu + 1.0, 30).zeros
    assert np.all(a < b)
    assert np.all(b[:-1] < a[1:])


def test_mcmahon_guess_close_for_large_index():
    assert mcmahon_guess(0, 1000) == pytest.approx(zero_table(0, 1000).zeros[-1], abs=1e-9)
    with pytest.raises(DomainError):
        mcmahon_guess(0, 0)


def test_refine_zero_examples():
    assert refine_zero(0.5, 3.1) == pytest.approx(math.pi, abs=1e-12)
    assert refine_zero(1, 3.83) == pytest.approx(3.8317059702075125, abs=1e-12)
    j = refine_zero(2.0, 5.2)
    assert abs(bessel_j(2.0, j).value) <= 1e-12


def test_table_validation():
    with pytest.raises(DomainError):
        ZeroTable(Order(0), np.array([2.0, 1.0]), 0.0)
    with pytest.raises(DomainError):
        zero_table(0, 0)
    table = zero_table(0, 10)
    assert np.all(table.poles == -table.zeros**2)
    assert len(table.head(3)) == 3
    with pytest.raises(ValueError):
        table.zeros[0] = 1.0
