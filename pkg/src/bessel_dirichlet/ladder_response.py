"""Lumped ladder-network response ``I = V + (dG/dt) * V``.

The kernel derivative is ``-Phi``, a sum of decaying exponentials with the
constant weight ``c = 4(nu+1)``, so the convolution splits into one scalar
state per mode, ``y_n' = -alpha_n y_n + V``, and ``I = V - c sum_n y_n``.
Between samples V is taken piecewise linear, which the exponential
integrator below propagates exactly.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .grids import SignalTrace, TimeGrid
from .relaxation_series import DirichletSeries, relaxation_G

__all__ = [
    "TimeGrid",
    "SignalTrace",
    "PronyModel",
    "UnderResolvedWarning",
    "step_response",
    "convolve_response",
    "prony_export",
]


_UNDERFLOW = 746.0  # exp(-z) == 0.0 in double precision beyond this


class UnderResolvedWarning(UserWarning):
    """The grid step exceeds the time scale of the fastest retained mode."""


def step_response(series: DirichletSeries, grid: TimeGrid) -> SignalTrace:
    """Current after a unit step in potential, ``I(t) = G(t)``."""
    if grid.times[0] <= 0.0:
        raise DomainError("step response is evaluated at t > 0 only")
    return SignalTrace(grid, relaxation_G(series, grid.times))


def _phi2(z: np.ndarray) -> np.ndarray:
    """``(exp(-z) - 1 + z) / z^2``, with a Taylor branch near zero."""
    out = np.empty_like(z)
    small = z < 0.1
    zs = z[small]
    # 1/2 - z/6 + z^2/24 - z^3/120 + ...
    acc = np.zeros_like(zs)
    for k in range(10, 1, -1):
        acc = acc * (-zs) + 1.0 / math.factorial(k)
    out[small] = acc
    zl = z[~small]
    out[~small] = (zl + np.expm1(-zl)) / (zl * zl)
    return out


def convolve_response(series: DirichletSeries, signal: SignalTrace) -> SignalTrace:
    """Response current for a sampled causal potential.

    V is zero before the first sample and linear between samples; every
    stored mode is propagated exactly over each step.

    Warns
    -----
    UnderResolvedWarning
        When a step exceeds ``1 / alpha_N``.  The fast modes then only track
        V quasi-statically, which is still exact for piecewise-linear input.
    """
    times = signal.times
    v = signal.values
    rates = np.asarray(series.rates)
    steps = np.diff(times)
    if steps.size and steps.max() * rates[-1] > 1.0:
        warnings.warn(
            f"step {steps.max():.3g} exceeds 1/alpha_N = {1.0 / rates[-1]:.3g}",
            UnderResolvedWarning,
            stacklevel=2,
        )
    # Modes with alpha * h beyond the underflow point of exp(-z) forget their
    # state within every step, so their sum has a closed form in V.
    n_slow = int(np.searchsorted(rates, _UNDERFLOW / steps.min())) if steps.size else 0
    slow = rates[:n_slow]
    fast = rates[n_slow:]
    fast_inv = float(np.sum(1.0 / fast))
    fast_inv2 = float(np.sum(1.0 / fast**2))
    y = np.zeros_like(slow)
    current = np.empty_like(v)
    current[0] = v[0]
    for k, h in enumerate(steps):
        z = slow * h
        decay = np.exp(-z)
        a = -np.expm1(-z) / slow
        b = h * _phi2(z)
        dv = v[k + 1] - v[k]
        y = decay * y + v[k] * a + dv * b
        fast_sum = v[k + 1] * fast_inv - dv * fast_inv2 / h
        current[k + 1] = v[k + 1] - series.weight * (float(np.sum(y)) + fast_sum)
    return SignalTrace(signal.grid, current)


@dataclass(frozen=True)
class PronyModel:
    """Exponential-sum form of the memory function with a unit static term.

    ``Phi(t) = sum c_n exp(-alpha_n t)``, and the relaxation modulus is
    ``static_term - sum (c_n / alpha_n)(1 - exp(-alpha_n t))``.
    """

    amplitudes: np.ndarray
    rates: np.ndarray
    static_term: float = 1.0

    def __post_init__(self):
        if self.amplitudes.shape != self.rates.shape:
            raise DomainError("amplitudes and rates must have the same length")
        if np.any(np.diff(self.rates) <= 0.0):
            raise DomainError("rates must be strictly increasing")

    def __len__(self):
        return self.rates.size

    def memory(self, t):
        arr = np.asarray(t, dtype=float)
        values = np.exp(-np.multiply.outer(arr, self.rates)) @ self.amplitudes
        return values if np.ndim(t) else float(values)

    def relaxation(self, t):
        arr = np.asarray(t, dtype=float)
        decayed = -np.expm1(-np.multiply.outer(arr, self.rates))
        values = self.static_term - decayed @ (self.amplitudes / self.rates)
        return values if np.ndim(t) else float(values)


def prony_export(series: DirichletSeries) -> PronyModel:
    amplitudes = np.full(series.n_terms, series.weight)
    rates = np.array(series.rates)
    amplitudes.setflags(write=False)
    rates.setflags(write=False)
    return PronyModel(amplitudes, rates, 1.0)
