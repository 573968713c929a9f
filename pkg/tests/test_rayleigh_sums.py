import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bessel_dirichlet import (
    DomainError,
    PoleError,
    bessel_ratio_direct,
    calogero_limit_check,
    calogero_ratio_series,
    convergence_diagnostics,
    rayleigh_closed_form,
    rayleigh_partial_sum,
    zero_table,
)
from bessel_dirichlet.rayleigh_sums import tail_bracket
from bessel_dirichlet.special import trigamma


def test_closed_form_values():
    assert rayleigh_closed_form(0.5) == pytest.approx(1 / 6)
    assert rayleigh_closed_form(-0.5) == pytest.approx(0.5)


@pytest.mark.parametrize("nu", [-0.5, -0.1, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0])
def test_sum_with_tail_hits_closed_form(nu):
    est = rayleigh_partial_sum(zero_table(nu, 500))
    assert abs(est.total - rayleigh_closed_form(nu)) <= 1e-6
    assert est.tail_lower <= rayleigh_closed_form(nu) - est.partial_sum <= est.tail_upper


@given(st.floats(min_value=-0.99, max_value=20.0), st.integers(min_value=1, max_value=400))
def test_tail_bracket_contains_true_tail(nu, n):
    table = zero_table(nu, n)
    true_tail = rayleigh_closed_form(nu) - math.fsum((1 / table.zeros**2).tolist())
    est, lo, hi = tail_bracket(nu, n)
    assert lo - 1e-15 <= true_tail <= hi + 1e-15
    assert lo <= est <= hi


def test_trigamma_values():
    assert trigamma(1.0) == pytest.approx(math.pi**2 / 6, rel=1e-15)
    assert trigamma(0.5) == pytest.approx(math.pi**2 / 2, rel=1e-15)
    with pytest.raises(DomainError):
        trigamma(0.0)


@pytest.mark.parametrize("nu", [-0.9, 0.0, 1.0, 4.0])
def test_calogero_limit(nu):
    assert abs(calogero_limit_check(nu) - 1 / (4 * (nu + 1))) <= 1e-10


@pytest.mark.parametrize("nu", [0.0, 1.3])
def test_partial_fraction_matches_direct_ratio(nu):
    table = zero_table(nu, 2000)
    xs = np.linspace(0, table.zeros[4], 52)[1:-1]
    err = max(abs(calogero_ratio_series(nu, x, table) - bessel_ratio_direct(nu, x)) for x in xs)
    assert err <= 1e-5


def test_half_order_ratio_closed_form():
    # J_{3/2}/J_{1/2} = 1/x - cot x
    x = 1.3
    assert bessel_ratio_direct(0.5, x) == pytest.approx(1 / x - 1 / math.tan(x), rel=1e-13)


def test_poles_rejected():
    table = zero_table(0, 50)
    with pytest.raises(PoleError):
        calogero_ratio_series(0, table.zeros[2], table)
    with pytest.raises(PoleError):
        bessel_ratio_direct(0.5, math.pi)
    with pytest.raises(DomainError):
        calogero_ratio_series(0, table.zeros[-1] + 1, table)


@pytest.mark.parametrize("nu", [0.0, 0.5, 2.0])
def test_convergence_diagnostics(nu):
    diag = convergence_diagnostics(nu, zero_table(nu, 1000))
    assert diag.d_estimate <= 1e-3
    assert diag.sigma_estimate <= 1e-3
    assert np.all(np.diff(diag.d_values[2:]) < 0)
    assert diag.d_sequence[0][0] == 1 and len(diag.sigma_sequence) == 1000


def test_diagnostics_need_ten_zeros():
    with pytest.raises(DomainError):
        convergence_diagnostics(0, zero_table(0, 9))
