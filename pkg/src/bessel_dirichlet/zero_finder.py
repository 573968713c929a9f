"""Positive zeros j_{nu,n} of J_nu.

Zeros below the asymptotic switch of the kernel are located one by one by a
sign-change scan, bisection and safeguarded Newton.  Above it the McMahon
guesses bracket every zero and the Newton iteration runs vectorised on the
Hankel expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bessel_kernel import (
    EPS,
    Order,
    as_order,
    asymptotic_threshold,
    bessel_j,
    bessel_j_pair,
    hankel_j,
    hankel_j_pair,
)
from .errors import ConvergenceError, DomainError

MAX_NEWTON_ITERATIONS = 50
SCAN_STEP = math.pi / 8.0
_CHUNK = 8192


@dataclass(frozen=True)
class ZeroTable:
    """First N positive zeros of J_nu, in increasing order."""

    order: Order
    zeros: np.ndarray
    residual_bound: float
    scanned: int = field(default=0, compare=False)  # zeros found by the scalar scan

    def __post_init__(self):
        zeros = np.array(self.zeros, dtype=float)
        if zeros.ndim != 1 or zeros.size == 0:
            raise DomainError("a zero table needs at least one zero")
        if zeros[0] <= 0.0 or np.any(np.diff(zeros) <= 0.0):
            raise DomainError("zeros must be positive and strictly increasing")
        zeros.setflags(write=False)
        object.__setattr__(self, "zeros", zeros)

    def __len__(self):
        return self.zeros.size

    @property
    def nu(self) -> float:
        return self.order.nu

    @property
    def poles(self) -> np.ndarray:
        """Poles ``-j^2`` of the Laplace image on the negative real axis."""
        return -self.zeros**2

    def head(self, count: int) -> "ZeroTable":
        if not 1 <= count <= len(self):
            raise DomainError(f"cannot take {count} zeros from a table of {len(self)}")
        res = float(np.max(np.abs(_j_values(self.nu, self.zeros[:count]))))
        return ZeroTable(self.order, self.zeros[:count], res, min(self.scanned, count))


def mcmahon_guess(order, n: int) -> float:
    """Two-term McMahon approximation ``beta - (4 nu^2 - 1) / (8 beta)``."""
    nu = as_order(order).nu
    if n < 1:
        raise DomainError(f"zero index must be >= 1, got {n}")
    beta = (n + 0.5 * nu - 0.25) * math.pi
    return beta - (4.0 * nu * nu - 1.0) / (8.0 * beta)


def _mcmahon_array(nu: float, n: np.ndarray) -> np.ndarray:
    beta = (n + 0.5 * nu - 0.25) * math.pi
    return beta - (4.0 * nu * nu - 1.0) / (8.0 * beta)


def _mcmahon_start(nu: float, n: np.ndarray) -> np.ndarray:
    # three-term McMahon expansion; only a Newton starting point
    mu = 4.0 * nu * nu
    beta = (n + 0.5 * nu - 0.25) * math.pi
    b8 = 8.0 * beta
    return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8**3)


def _j_values(nu: float, x: np.ndarray) -> np.ndarray:
    out = np.empty_like(x)
    big = x >= asymptotic_threshold(nu)
    if np.any(big):
        out[big] = hankel_j(nu, x[big])
    for i in np.flatnonzero(~big):
        out[i] = bessel_j(nu, x[i]).value
    return out


def _derivative(nu: float, x: float, j_nu: float, j_nu1: float) -> float:
    # J_nu'(x) = (nu / x) J_nu(x) - J_{nu+1}(x)
    return nu / x * j_nu - j_nu1


def _find_bracket(nu: float, guess: float):
    """Closest sign change of J_nu to ``guess`` within half a period."""
    f0 = bessel_j(nu, guess).value
    if f0 == 0.0:
        return guess, guess
    for k in range(1, 5):
        step = k * SCAN_STEP
        for a, b in ((guess - step, guess - step + SCAN_STEP), (guess + step - SCAN_STEP, guess + step)):
            if a <= 0.0:
                continue
            fa, fb = bessel_j(nu, a).value, bessel_j(nu, b).value
            if fa == 0.0:
                return a, a
            if fa * fb <= 0.0:
                return a, b
    raise ConvergenceError(f"no sign change of J_{nu} within pi/2 of {guess}", bracket=None)


def _bisect(nu: float, a: float, b: float, width: float):
    fa = bessel_j(nu, a).value
    while b - a > width:
        mid = 0.5 * (a + b)
        fm = bessel_j(nu, mid).value
        if fm == 0.0:
            return mid, mid
        if (fm > 0.0) == (fa > 0.0):
            a, fa = mid, fm
        else:
            b = mid
    return a, b


def _safeguarded_newton(nu: float, a: float, b: float) -> float:
    if a == b:
        return a
    fa = bessel_j(nu, a).value
    x = 0.5 * (a + b)
    for _ in range(MAX_NEWTON_ITERATIONS):
        j_nu, j_nu1 = bessel_j_pair(nu, x)
        if j_nu == 0.0:
            return x
        if (j_nu > 0.0) == (fa > 0.0):
            a, fa = x, j_nu
        else:
            b = x
        d = _derivative(nu, x, j_nu, j_nu1)
        step = j_nu / d if d != 0.0 else math.inf
        if abs(step) <= 2.0 * EPS * x or b - a <= 4.0 * EPS * b:
            return min(max(x - step, a), b)
        x_new = x - step
        x = x_new if a < x_new < b else 0.5 * (a + b)
    raise ConvergenceError(f"Newton failed for J_{nu} zero in [{a}, {b}]", bracket=(a, b))


def refine_zero(order, guess: float, bracket: tuple[float, float] | None = None) -> float:
    """Polish a zero of J_nu near ``guess`` by Newton with bisection fallback.

    Raises
    ------
    ConvergenceError
        If no bracket is found near ``guess`` or the iteration stalls; the
        exception carries the last bracket.
    """
    nu = as_order(order).nu
    guess = float(guess)
    if not math.isfinite(guess) or guess <= 0.0:
        raise DomainError(f"guess must be positive, got {guess!r}")
    a, b = bracket if bracket is not None else _find_bracket(nu, guess)
    return _safeguarded_newton(nu, a, b)


def _scan_zeros(nu: float, count: int, stop_at: float) -> list[float]:
    """Zeros by forward scanning, until ``count`` found or beyond ``stop_at``."""
    # j_{nu,1} > max(nu, 2 sqrt(nu + 1)); the second bound follows from the
    # positive terms of sum 1/j^2 = 1/(4(nu + 1))
    x = max(nu, 2.0 * math.sqrt(nu + 1.0))
    fx = bessel_j(nu, x).value
    zeros: list[float] = []
    while len(zeros) < count and x <= stop_at:
        y = x + SCAN_STEP
        fy = bessel_j(nu, y).value
        if fx == 0.0:
            zeros.append(x)
        elif fx * fy < 0.0 or fy == 0.0:
            a, b = _bisect(nu, x, y, 1e-3)
            zeros.append(_safeguarded_newton(nu, a, b))
            if fy == 0.0:
                y += 1e-9
                fy = bessel_j(nu, y).value
        x, fx = y, fy
    return zeros


def _asymptotic_zeros(nu: float, first: int, last: int) -> np.ndarray:
    """Zeros with indices first..last (inclusive) via bracketed vectorised Newton."""
    out = []
    for start in range(first, last + 1, _CHUNK):
        n = np.arange(start, min(start + _CHUNK, last + 1), dtype=float)
        out.append(_newton_chunk(nu, n))
    return np.concatenate(out)


def _newton_chunk(nu: float, n: np.ndarray) -> np.ndarray:
    guess = _mcmahon_array(nu, n)
    lo = guess - 0.5 * math.pi
    hi = guess + 0.5 * math.pi
    f_lo = hankel_j(nu, lo)
    f_hi = hankel_j(nu, hi)
    bad = f_lo * f_hi > 0.0
    if np.any(bad):
        i = int(np.flatnonzero(bad)[0])
        raise ConvergenceError(
            f"no sign change of J_{nu} around McMahon guess for zero {int(n[i])}",
            bracket=(float(lo[i]), float(hi[i])),
        )
    x = _mcmahon_start(nu, n)
    x = np.where((x > lo) & (x < hi), x, guess)
    active = np.ones(x.shape, dtype=bool)
    for _ in range(MAX_NEWTON_ITERATIONS):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            return x
        xa = x[idx]
        j_nu, j_nu1 = hankel_j_pair(nu, xa)
        same = (j_nu > 0.0) == (f_lo[idx] > 0.0)
        lo[idx] = np.where(same, xa, lo[idx])
        hi[idx] = np.where(same, hi[idx], xa)
        d = nu / xa * j_nu - j_nu1
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(j_nu == 0.0, 0.0, j_nu / d)
        x_new = xa - step
        done = np.abs(step) <= 2.0 * EPS * xa
        outside = ~((x_new > lo[idx]) & (x_new < hi[idx])) & ~done
        x[idx] = np.where(outside, 0.5 * (lo[idx] + hi[idx]), x_new)
        active[idx[done]] = False
    if not np.any(active):
        return x
    i = int(np.flatnonzero(active)[0])
    raise ConvergenceError(
        f"Newton failed for zero {int(n[i])} of J_{nu}", bracket=(float(lo[i]), float(hi[i]))
    )


def zero_table(order, count: int) -> ZeroTable:
    """First ``count`` positive zeros of J_nu with their residual bound."""
    order = as_order(order)
    nu = order.nu
    count = int(count)
    if count < 1:
        raise DomainError(f"zero count must be >= 1, got {count}")

    switch = asymptotic_threshold(nu)
    # first index whose McMahon bracket lies entirely in the Hankel regime
    n_asym = 1
    while _mcmahon_array(nu, np.array([n_asym], dtype=float))[0] - 0.5 * math.pi < switch + math.pi:
        n_asym += 1
    n_asym = max(n_asym, 3)

    try:
        low = _scan_zeros(nu, min(count, n_asym - 1), stop_at=math.inf)
    except ConvergenceError as exc:
        raise ConvergenceError(f"zero scan failed for nu={nu}: {exc}", exc.bracket) from exc
    zeros = np.array(low, dtype=float)
    if count >= n_asym:
        try:
            high = _asymptotic_zeros(nu, n_asym, count)
        except ConvergenceError as exc:
            raise ConvergenceError(f"zero_table(nu={nu}): {exc}", exc.bracket) from exc
        zeros = np.concatenate([zeros, high])

    residual = float(np.max(np.abs(_j_values(nu, zeros))))
    return ZeroTable(order, zeros, residual, scanned=len(low))
