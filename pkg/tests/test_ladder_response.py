import math
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from bessel_dirichlet import (
    DomainError,
    SignalTrace,
    TimeGrid,
    UnderResolvedWarning,
    build_series,
    convolve_response,
    memory_Phi,
    prony_export,
    relaxation_G,
    step_response,
    zero_table,
)

TAIL_TOL = 1e-5


@pytest.fixture(scope="module")
def series():
    return build_series(0.0, TAIL_TOL, 0.01)


@pytest.fixture(scope="module")
def grid():
    return TimeGrid.linear(0.0, 5.0, 200)


def respond(series, grid, v):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnderResolvedWarning)
        return convolve_response(series, SignalTrace(grid, v)).values


def test_step_response_equals_relaxation(series):
    g = TimeGrid.geometric(1e-3, 50, 30)
    trace = step_response(series, g)
    assert np.array_equal(trace.values, relaxation_G(series, g.times))
    assert trace.values[-1] <= 1e-12
    with pytest.raises(DomainError):
        step_response(series, TimeGrid.linear(0, 1, 3))


def test_step_response_starts_near_one(series):
    assert step_response(series, TimeGrid(np.array([1e-10]))).values[0] == pytest.approx(1.0, abs=1e-4)


def test_initial_decay_rate():
    s = build_series(0.0, 1e-4, 0.01)
    assert -memory_Phi(s, 1e-4) == pytest.approx(-112.84, rel=0.02)


def test_sampled_step_matches_step_response(series, grid):
    current = respond(series, grid, np.ones(len(grid)))
    ref = step_response(series, TimeGrid(grid.times[1:])).values
    assert current[0] == 1.0
    assert np.max(np.abs(current[1:] - ref)) <= 1e-5 + TAIL_TOL


def test_zero_input(series, grid):
    assert np.all(respond(series, grid, np.zeros(len(grid))) == 0.0)


def test_constant_input_scales(series, grid):
    unit = respond(series, grid, np.ones(len(grid)))
    assert np.allclose(respond(series, grid, 3.5 * np.ones(len(grid))), 3.5 * unit, rtol=0, atol=1e-14)


@given(
    hnp.arrays(float, 200, elements=st.floats(-10, 10)),
    hnp.arrays(float, 200, elements=st.floats(-10, 10)),
    st.floats(-3, 3),
    st.floats(-3, 3),
)
def test_linearity(v1, v2, a, b):
    s = build_series(0.0, 1e-4, 0.01)
    g = TimeGrid.linear(0.0, 5.0, 200)
    lhs = respond(s, g, a * v1 + b * v2)
    rhs = a * respond(s, g, v1) + b * respond(s, g, v2)
    assert np.max(np.abs(lhs - rhs)) <= 1e-11 * (1 + np.max(np.abs(v1)) + np.max(np.abs(v2)))


@given(hnp.arrays(float, 200, elements=st.floats(-10, 10)), st.integers(1, 199))
def test_causality(v, k):
    s = build_series(0.0, 1e-4, 0.01)
    g = TimeGrid.linear(0.0, 5.0, 200)
    bumped = v.copy()
    bumped[k] += 1.0
    assert np.array_equal(respond(s, g, v)[:k], respond(s, g, bumped)[:k])


def test_ramp_against_closed_form(series):
    # for V = t each mode state is (t - (1 - exp(-alpha t)) / alpha) / alpha
    g = TimeGrid.linear(0.0, 2.0, 41)
    t = g.times
    current = respond(series, g, t)
    a, r = series.amplitudes, series.rates
    exact = t - series.weight * np.array(
        [np.sum((ti - (1 - np.exp(-r * ti)) / r) / r) for ti in t]
    )
    assert np.max(np.abs(current - exact)) <= 1e-12
    assert a.size == r.size


def test_under_resolution_warning(series):
    g = TimeGrid.linear(0.0, 1.0, 5)
    with pytest.warns(UnderResolvedWarning):
        convolve_response(series, SignalTrace(g, np.ones(5)))


def test_resolved_grid_is_silent():
    s = build_series(0.5, 0.2, 0.1)
    g = TimeGrid.linear(0.0, 0.1, int(0.1 * s.rates[-1]) + 3)
    with warnings.catch_warnings():
        warnings.simplefilter("error", UnderResolvedWarning)
        convolve_response(s, SignalTrace(g, np.ones(len(g))))


def test_prony_export():
    s = build_series(0.0, 1e-3, 0.1)
    model = prony_export(s)
    assert len(model) == s.n_terms
    assert model.amplitudes[0] == 4.0
    assert model.rates[0] == pytest.approx(zero_table(0, 1).zeros[0] ** 2, rel=1e-15)
    assert model.rates[0] == pytest.approx(5.78318596, rel=1e-8)
    t = np.array([0.1, 0.5, 2.0])
    assert np.allclose(model.memory(t), memory_Phi(s, t), rtol=1e-12)
    assert np.allclose(model.relaxation(t), relaxation_G(s, t), atol=2e-3)


def test_prony_half_order_modes():
    model = prony_export(build_series(0.5, 1e-2, 0.1))
    n = np.arange(1, len(model) + 1)
    assert np.all(model.amplitudes == 6.0)
    assert np.allclose(model.rates, (n * math.pi) ** 2, rtol=1e-14)


def test_trace_length_checked():
    with pytest.raises(DomainError):
        SignalTrace(TimeGrid.linear(0, 1, 3), [1.0, 2.0])
    with pytest.raises(DomainError):
        TimeGrid(np.array([0.0, 0.0, 1.0]))
