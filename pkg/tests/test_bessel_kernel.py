import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from bessel_dirichlet import DomainError, Order, bessel_i_scaled, bessel_j, laplace_image, modified_ratio
from bessel_dirichlet.bessel_kernel import asymptotic_threshold

orders = st.floats(min_value=-0.99, max_value=12.0)


def test_order_rejects_minus_one_and_below():
    for nu in (-1.0, -1.5, float("nan")):
        with pytest.raises(DomainError, match="requires nu > -1"):
            Order(nu)
    assert float(Order(0.25)) == 0.25


@pytest.mark.parametrize("nu, expected", [(0.0, 1.0), (1.0, 0.0), (3.5, 0.0)])
def test_value_at_origin(nu, expected):
    assert bessel_j(nu, 0.0).value == expected


def test_negative_order_unbounded_at_origin():
    with pytest.raises(DomainError):
        bessel_j(-0.5, 0.0)


def test_negative_argument_rejected():
    with pytest.raises(DomainError):
        bessel_j(0, -1.0)
    with pytest.raises(DomainError):
        bessel_i_scaled(0, -1.0)


def test_half_order_vanishes_at_pi():
    assert abs(bessel_j(0.5, math.pi).value) <= 1e-12


def test_first_zero_of_j0():
    assert abs(bessel_j(0, 2.404825557695773).value) <= 1e-12


def test_half_order_closed_form():
    for x in (0.3, 2.0, 17.0, 80.0):
        ref = math.sqrt(2 / (math.pi * x)) * math.sin(x)
        assert bessel_j(0.5, x).value == pytest.approx(ref, abs=1e-14)


@given(orders, st.floats(min_value=1e-3, max_value=300.0))
def test_matches_high_precision(nu, x):
    got = bessel_j(nu, x)
    ref = oracles.j(nu, x)
    scale = max(abs(ref), 1.0 / math.sqrt(max(x, 1.0)) * 0.1, 1e-300)
    assert abs(got.value - ref) <= 1e-12 * scale + got.abs_error_bound
    assert got.abs_error_bound >= 0 and math.isfinite(got.abs_error_bound)


@pytest.mark.parametrize("nu", [-0.7, 0.0, 2.5, 9.0])
def test_continuous_across_regime_switch(nu):
    x0 = asymptotic_threshold(nu)
    for x in (x0 * (1 - 1e-12), x0 * (1 + 1e-12)):
        assert bessel_j(nu, x).value == pytest.approx(oracles.j(nu, x), abs=1e-12)


def test_i_scaled_anchors():
    assert bessel_i_scaled(0, 0.0).value == 1.0
    assert bessel_i_scaled(2, 0.0).value == 0.0
    assert bessel_i_scaled(0, 100.0).value == pytest.approx(1 / math.sqrt(200 * math.pi), rel=5e-3)


@given(orders, st.floats(min_value=1e-3, max_value=800.0))
def test_i_scaled_matches_high_precision(nu, x):
    assert bessel_i_scaled(nu, x).value == pytest.approx(oracles.i_scaled(nu, x), rel=1e-12)


def test_modified_ratio_small_argument():
    assert modified_ratio(0, 1e-4) == pytest.approx(5e-5, abs=1e-12)
    assert modified_ratio(1, 1e-4) == pytest.approx(2.5e-5, abs=1e-12)


def test_modified_ratio_large_argument():
    assert modified_ratio(0, 50.0) == pytest.approx(0.99, abs=1e-3)


@given(orders, st.floats(min_value=1e-6, max_value=1e4))
def test_modified_ratio_in_unit_interval(nu, x):
    r = modified_ratio(nu, x)
    assert 0.0 < r < 1.0


def test_laplace_image_half_order():
    # I_{3/2}/I_{1/2} = coth(r) - 1/r
    for s in (0.01, 1.0, 30.0, 1e4):
        r = math.sqrt(s)
        ref = 3.0 / (s * r) * (1 / math.tanh(r) - 1 / r)
        assert laplace_image(0.5, s) == pytest.approx(ref, rel=1e-12)


@given(orders, st.floats(min_value=1e-4, max_value=1e6))
def test_laplace_image_matches_high_precision(nu, s):
    assert laplace_image(nu, s) == pytest.approx(oracles.image(nu, s), rel=1e-11)


def test_laplace_image_limits():
    # s F(s) -> 1 as s -> 0 and s^{3/2} F(s) -> 2(nu+1) as s -> oo
    assert 1e-8 * laplace_image(0, 1e-8) == pytest.approx(1.0, abs=1e-8)
    assert laplace_image(1, 1e8) * 1e12 == pytest.approx(4.0, rel=1e-3)
    with pytest.raises(DomainError):
        laplace_image(0, 0.0)


def test_vector_free_scalars():
    assert isinstance(bessel_j(1, 2.0).value, float)
    assert np.isfinite(bessel_j(50, 1e-3).value)
