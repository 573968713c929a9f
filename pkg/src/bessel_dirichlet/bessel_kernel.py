"""Real-argument Bessel kernels J_nu and exp(-x) I_nu for orders nu > -1.

Three regimes are used for J_nu:

* ascending power series while the alternating terms do not cancel badly,
* Miller backward recurrence normalised with the Neumann sum
  ``(x/2)**nu = sum_k (nu + 2k) Gamma(nu + k) / k! J_{nu+2k}(x)``,
* the Hankel large-argument expansion once ``x >= max(20, (|nu| + 1)**2)``.

I_nu is only ever exposed in the scaled form ``exp(-x) I_nu(x)``; its power
series has positive terms, so it is used up to the same asymptotic switch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

EPS = float(np.finfo(float).eps)
_MAX_SERIES_TERMS = 2000


@dataclass(frozen=True)
class Order:
    """Validated Bessel order ``nu > -1``."""

    nu: float

    def __post_init__(self):
        nu = float(self.nu)
        if not math.isfinite(nu) or nu <= -1.0:
            raise DomainError(f"Bessel order requires nu > -1, got nu={self.nu!r}")
        object.__setattr__(self, "nu", nu)

    def __float__(self):
        return self.nu


def as_order(order) -> Order:
    return order if isinstance(order, Order) else Order(order)


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_error_bound: float

    def __float__(self):
        return self.value


def asymptotic_threshold(nu: float) -> float:
    """Smallest argument where the large-x expansions reach double precision."""
    return max(20.0, (abs(nu) + 1.0) ** 2)


def _check_x(x) -> float:
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"argument must be finite and >= 0, got x={x!r}")
    return x


def _log_prefactor(nu: float, x: float) -> float:
    # log of (x/2)**nu / Gamma(nu + 1); lgamma keeps large orders finite
    return nu * math.log(0.5 * x) - math.lgamma(nu + 1.0)


# ---------------------------------------------------------------------------
# power series
# ---------------------------------------------------------------------------


def _power_series(nu: float, x: float, sign: float, log_scale: float = 0.0):
    """Sum of ``(x/2)**nu sum_k sign**k (x/2)**(2k) / (k! Gamma(nu+k+1))``.

    ``log_scale`` is added to the log of the leading term (used for the
    exp(-x) scaling of I_nu). Returns ``(value, sum of |terms|)``.
    """
    q = 0.25 * x * x
    term = math.exp(_log_prefactor(nu, x) + log_scale)
    total = term
    magnitude = abs(term)
    for k in range(1, _MAX_SERIES_TERMS):
        term *= sign * q / (k * (nu + k))
        total += term
        magnitude += abs(term)
        if abs(term) <= 1e-17 * magnitude and k > q:
            break
    return total, magnitude


def _taylor_limit(nu: float) -> float:
    # terms decrease monotonically while (x/2)^2 < nu + 1
    return max(4.0, math.sqrt(2.0 * (nu + 1.0)))


# ---------------------------------------------------------------------------
# Miller backward recurrence
# ---------------------------------------------------------------------------


def _miller_pair(nu: float, x: float):
    """J_nu(x) and J_{nu+1}(x) by backward recurrence from a high order."""
    m = int(x + 20.0 + 10.0 * x ** (1.0 / 3.0))
    m += m % 2
    # h_k = Gamma(nu + k) / (Gamma(nu + 1) k!) for k >= 1
    h = [1.0] * (m // 2 + 1)
    for k in range(1, m // 2):
        h[k + 1] = h[k] * (nu + k) / (k + 1)

    j_up, j_cur = 0.0, 1e-30
    norm = 0.0
    j_next_order = 0.0  # value at order nu + 1 once reached
    for k in range(m, 0, -1):
        # j_cur holds order nu + k; produce order nu + k - 1
        if k % 2 == 0 and k > 0:
            norm += (nu + k) * h[k // 2] * j_cur
        j_down = 2.0 * (nu + k) / x * j_cur - j_up
        j_up, j_cur = j_cur, j_down
        if abs(j_cur) > 1e250:
            j_up *= 1e-250
            j_cur *= 1e-250
            norm *= 1e-250
        if k == 1:
            j_next_order = j_up
    norm += j_cur
    scale = math.exp(_log_prefactor(nu, x)) / norm
    j_nu = j_cur * scale
    j_nu1 = j_next_order * scale
    amplitude = math.sqrt(2.0 / (math.pi * x))
    err = 8.0 * EPS * math.sqrt(m) * max(amplitude, abs(j_nu))
    return j_nu, j_nu1, err


# ---------------------------------------------------------------------------
# large-argument expansions (vectorised)
# ---------------------------------------------------------------------------


def _hankel_pq(nu: float, x: np.ndarray):
    """Hankel P, Q sums for order nu; returns ``(P, Q, last |term|)``."""
    mu = 4.0 * nu * nu
    term = np.ones_like(x)
    p = np.ones_like(x)
    q = np.zeros_like(x)
    last = term
    for k in range(1, 200):
        term = term * (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        # t_k enters P with sign (-1)^(k/2) for even k, Q with (-1)^((k-1)/2)
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2:
            q = q + sign * term
        else:
            p = p + sign * term
        last = np.abs(term)
        if np.max(last) < 1e-17:
            break
    return p, q, last


def _hankel_j(order: float, x: np.ndarray, cx: np.ndarray, sx: np.ndarray, amp: np.ndarray):
    phi = (0.5 * order + 0.25) * math.pi
    cphi, sphi = math.cos(phi), math.sin(phi)
    # cos/sin of (x - phi) without rounding the large difference
    cchi = cx * cphi + sx * sphi
    schi = sx * cphi - cx * sphi
    p, q, _ = _hankel_pq(order, x)
    return amp * (p * cchi - q * schi)


def hankel_j(nu: float, x):
    """Vectorised J_nu(x) from the Hankel expansion (large x only)."""
    x = np.asarray(x, dtype=float)
    return _hankel_j(nu, x, np.cos(x), np.sin(x), np.sqrt(2.0 / (np.pi * x)))


def hankel_j_pair(nu: float, x):
    """Vectorised ``(J_nu(x), J_{nu+1}(x))`` from the Hankel expansion."""
    x = np.asarray(x, dtype=float)
    cx, sx = np.cos(x), np.sin(x)
    amp = np.sqrt(2.0 / (np.pi * x))
    return _hankel_j(nu, x, cx, sx, amp), _hankel_j(nu + 1.0, x, cx, sx, amp)


def _hankel_i_scaled(nu: float, x: float):
    mu = 4.0 * nu * nu
    term = 1.0
    total = 1.0
    for k in range(1, 200):
        term *= -(mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        total += term
        if abs(term) < 1e-17:
            break
    pref = 1.0 / math.sqrt(2.0 * math.pi * x)
    return pref * total, pref * (abs(term) + 4.0 * EPS * abs(total))


# ---------------------------------------------------------------------------
# public kernels
# ---------------------------------------------------------------------------


def _j_at_zero(nu: float) -> EvalResult:
    if nu == 0.0:
        return EvalResult(1.0, 0.0)
    if nu > 0.0:
        return EvalResult(0.0, 0.0)
    raise DomainError(f"J_nu(0) is unbounded for -1 < nu < 0 (nu={nu})")


def bessel_j(order, x) -> EvalResult:
    """Bessel function of the first kind J_nu(x) for x >= 0.

    Raises
    ------
    DomainError
        For x < 0, non-finite x, or x == 0 with -1 < nu < 0.
    """
    nu = as_order(order).nu
    x = _check_x(x)
    if x == 0.0:
        return _j_at_zero(nu)
    if x <= _taylor_limit(nu):
        value, magnitude = _power_series(nu, x, -1.0)
        return EvalResult(value, 4.0 * EPS * magnitude)
    if x < asymptotic_threshold(nu):
        value, _, err = _miller_pair(nu, x)
        return EvalResult(value, err)
    j_nu, _ = hankel_j_pair(nu, x)
    amp = math.sqrt(2.0 / (math.pi * x))
    return EvalResult(float(j_nu), 16.0 * EPS * amp)


def bessel_j_pair(order, x: float) -> tuple[float, float]:
    """``(J_nu(x), J_{nu+1}(x))`` for x > 0, sharing work where possible."""
    nu = as_order(order).nu
    x = _check_x(x)
    if x == 0.0:
        return _j_at_zero(nu).value, 0.0
    if x <= _taylor_limit(nu):
        return _power_series(nu, x, -1.0)[0], _power_series(nu + 1.0, x, -1.0)[0]
    if x < asymptotic_threshold(nu):
        j_nu, j_nu1, _ = _miller_pair(nu, x)
        return j_nu, j_nu1
    j_nu, j_nu1 = hankel_j_pair(nu, x)
    return float(j_nu), float(j_nu1)


def bessel_i_scaled(order, x) -> EvalResult:
    """Exponentially scaled modified Bessel function ``exp(-x) I_nu(x)``."""
    nu = as_order(order).nu
    return _i_scaled(nu, _check_x(x))


def _i_scaled(nu: float, x: float) -> EvalResult:
    if x == 0.0:
        if nu == 0.0:
            return EvalResult(1.0, 0.0)
        if nu > 0.0:
            return EvalResult(0.0, 0.0)
        raise DomainError(f"I_nu(0) is unbounded for -1 < nu < 0 (nu={nu})")
    if x < asymptotic_threshold(nu):
        value, magnitude = _power_series(nu, x, 1.0, log_scale=-x)
        return EvalResult(value, 4.0 * EPS * magnitude)
    value, err = _hankel_i_scaled(nu, x)
    return EvalResult(value, err)


def modified_ratio(order, x) -> float:
    """``I_{nu+1}(x) / I_nu(x)`` for x > 0; the exp(-x) scalings cancel."""
    nu = as_order(order).nu
    x = _check_x(x)
    if x == 0.0:
        raise DomainError("modified_ratio requires x > 0")
    return _i_scaled(nu + 1.0, x).value / _i_scaled(nu, x).value


def laplace_image(order, s) -> float:
    """Laplace image ``2(nu+1) / s^{3/2} * I_{nu+1}(sqrt s) / I_nu(sqrt s)``.

    It has a simple pole with residue 1 at s = 0 and decays like
    ``2(nu+1) s^{-3/2}`` for large s.
    """
    nu = as_order(order).nu
    s = float(s)
    if not math.isfinite(s) or s <= 0.0:
        raise DomainError(f"laplace_image requires finite s > 0, got s={s!r}")
    root = math.sqrt(s)
    return 2.0 * (nu + 1.0) / (s * root) * modified_ratio(nu, root)
