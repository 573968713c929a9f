"""Dirichlet series built on the zeros of J_nu.

With ``a_n = 4(nu+1)/j_n^2`` and ``alpha_n = j_n^2``:

* creep function      F(t)   = 1 - sum a_n exp(-alpha_n t)
* relaxation modulus  G(t)   = sum a_n exp(-alpha_n t) = 1 - F(t)
* memory function     Phi(t) = 4(nu+1) sum exp(-alpha_n t) = -G'(t)

Truncation is controlled two ways.  Uniformly in t, the neglected tail is at
most ``4(nu+1) sum_{n>N} 1/j_n^2``, bracketed by the Rayleigh tail machinery.
For t > 0 a geometric bound is much sharper: beyond the first zero,
consecutive zeros are at least ``0.98 pi`` apart, so
``alpha_{n+1} - alpha_n >= 1.96 pi j_{m+1}`` for all n > m, and the tail
after m terms is dominated by its first term over ``1 - exp(-delta t)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .bessel_kernel import Order, as_order
from .errors import DomainError, ResourceError
from .grids import TimeGrid
from .rayleigh_sums import tail_bracket
from .zero_finder import zero_table

MAX_TERMS = 1_000_000
GAP_FACTOR = 0.98
ACCURACY_FLOOR = 1e-17
_BLOCK = 1 << 22  # max matrix entries per evaluation block


@dataclass(frozen=True)
class DirichletSeries:
    """Truncated amplitude/rate pairs with their truncation certificates.

    ``n_exp`` is the number of terms that the geometric bound certifies for
    every ``t >= t_min``; ``phi_t_min`` is the smallest time at which all
    stored terms certify the memory function to ``tail_tol``.
    """

    order: Order
    amplitudes: np.ndarray
    rates: np.ndarray
    t_min: float
    tail_tol: float
    next_rate: float
    n_exp: int
    phi_t_min: float

    @property
    def nu(self) -> float:
        return self.order.nu

    @property
    def weight(self) -> float:
        return 4.0 * (self.nu + 1.0)

    @property
    def n_terms(self) -> int:
        return self.rates.size

    def __len__(self):
        return self.rates.size

    def uniform_tail(self, kept: int | None = None) -> float:
        """Upper bound on ``sum_{n > kept} a_n``, valid for every t >= 0."""
        kept = self.n_terms if kept is None else kept
        if kept < 1:
            return 1.0
        return self.weight * tail_bracket(self.nu, kept)[2]

    def geometric_tail(self, kept: int, t: float, weighted: bool = True) -> float:
        """Geometric bound on ``sum_{n > kept} w_n exp(-alpha_n t)``.

        ``w_n = a_n`` when ``weighted``, else the constant ``4(nu+1)``.
        """
        rate = self.rates[kept] if kept < self.n_terms else self.next_rate
        delta = 2.0 * GAP_FACTOR * math.pi * math.sqrt(rate)
        first = self.weight * math.exp(-rate * t)
        if weighted:
            first /= rate
        denom = -math.expm1(-delta * t)
        return first / denom if denom > 0.0 else math.inf

    def tail_bound(self, t: float, kept: int | None = None, weighted: bool = True) -> float:
        kept = self.n_terms if kept is None else kept
        bound = self.geometric_tail(kept, t, weighted)
        if weighted:
            bound = min(bound, self.uniform_tail(kept))
        return bound

    def terms_for(self, t: float, weighted: bool = True) -> int:
        """Fewest leading terms reaching the best accuracy the table certifies at t.

        That is the tail bound of the full table, or ``ACCURACY_FLOOR`` when
        the table is longer than needed.

        Raises
        ------
        DomainError
            If even all stored terms leave a tail above ``tail_tol`` at t
            (only possible for the unweighted memory-function sum).
        """
        full = self.tail_bound(t, self.n_terms, weighted)
        if full > self.tail_tol:
            raise DomainError(
                f"t={t:g} is below the certified time for this series "
                f"(tail bound {full:.3g} > {self.tail_tol:g})"
            )
        target = max(full, ACCURACY_FLOOR)
        lo, hi = 1, self.n_terms
        while lo < hi:
            mid = (lo + hi) // 2
            if self.tail_bound(t, mid, weighted) <= target:
                hi = mid
            else:
                lo = mid + 1
        return lo


def _uniform_terms(nu: float, tail_tol: float) -> int:
    weight = 4.0 * (nu + 1.0)

    def ok(n):
        return weight * tail_bracket(nu, n)[2] <= tail_tol

    if not ok(MAX_TERMS):
        raise ResourceError(
            f"tail_tol={tail_tol:g} needs more than {MAX_TERMS} zeros for nu={nu}"
        )
    lo, hi = 1, MAX_TERMS
    while lo < hi:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def _phi_certified_time(series: DirichletSeries) -> float:
    def bound(t):
        return series.geometric_tail(series.n_terms, t, weighted=False)

    hi = 1.0
    while bound(hi) > series.tail_tol:
        hi *= 2.0
    lo = hi * 1e-12
    for _ in range(200):
        mid = math.sqrt(lo * hi)
        if bound(mid) > series.tail_tol:
            lo = mid
        else:
            hi = mid
        if hi / lo < 1.0 + 1e-12:
            break
    return hi


def build_series(order, tail_tol: float, t_min: float) -> DirichletSeries:
    """Series whose neglected tail is at most ``tail_tol`` for every t >= 0.

    Raises
    ------
    ResourceError
        If the uniform tolerance needs more than ``MAX_TERMS`` zeros.
    """
    order = as_order(order)
    tail_tol = float(tail_tol)
    t_min = float(t_min)
    if not 0.0 < tail_tol < 1.0:
        raise DomainError(f"tail_tol must lie in (0, 1), got {tail_tol!r}")
    if not (t_min > 0.0 and math.isfinite(t_min)):
        raise DomainError(f"t_min must be finite and > 0, got {t_min!r}")
    nu = order.nu
    n_terms = _uniform_terms(nu, tail_tol)
    zeros = zero_table(order, n_terms + 1).zeros
    alpha = zeros**2
    rates = alpha[:n_terms].copy()
    amplitudes = 4.0 * (nu + 1.0) / rates
    rates.setflags(write=False)
    amplitudes.setflags(write=False)
    series = DirichletSeries(
        order, amplitudes, rates, t_min, tail_tol, float(alpha[-1]), n_exp=n_terms, phi_t_min=0.0
    )
    if series.geometric_tail(n_terms, t_min) <= tail_tol:
        lo, hi = 1, n_terms
        while lo < hi:
            mid = (lo + hi) // 2
            if series.geometric_tail(mid, t_min) <= tail_tol:
                hi = mid
            else:
                lo = mid + 1
        series = replace(series, n_exp=lo)
    return replace(series, phi_t_min=_phi_certified_time(series))


def _as_times(t):
    arr = np.asarray(t, dtype=float)
    if arr.size == 0:
        raise DomainError("no evaluation times given")
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise DomainError("evaluation times must be finite and > 0")
    return arr


def _exp_sum(rates: np.ndarray, coef, t: np.ndarray, log_power: float = 0.0) -> np.ndarray:
    """``sum_n coef_n * alpha_n^log_power * exp(-alpha_n t)`` for each t."""
    flat = t.ravel()
    out = np.empty(flat.size)
    rows = max(1, _BLOCK // max(rates.size, 1))
    log_rates = np.log(rates) if log_power else None
    for start in range(0, flat.size, rows):
        block = flat[start:start + rows, None]
        expo = -rates[None, :] * block
        if log_power:
            expo = expo + log_power * log_rates[None, :]
        out[start:start + rows] = np.exp(expo) @ coef if np.ndim(coef) else coef * np.exp(expo).sum(axis=1)
    return out.reshape(t.shape)


def _evaluate(series: DirichletSeries, t, weighted: bool):
    times = _as_times(t)
    kept = series.terms_for(float(times.min()), weighted)
    coef = series.amplitudes[:kept] if weighted else series.weight
    values = _exp_sum(series.rates[:kept], coef, times)
    return values if np.ndim(t) else float(values)


def relaxation_G(series: DirichletSeries, t):
    """Relaxation modulus ``G(t) = sum a_n exp(-alpha_n t)`` for t > 0."""
    return _evaluate(series, t, weighted=True)


def creep_F(series: DirichletSeries, t):
    """Creep (Bernstein) function ``F(t) = 1 - G(t)`` for t > 0."""
    return 1.0 - relaxation_G(series, t)


def memory_Phi(series: DirichletSeries, t):
    """Memory function ``Phi(t) = 4(nu+1) sum exp(-alpha_n t)``.

    Raises
    ------
    DomainError
        For t below ``series.phi_t_min``, where the stored terms no longer
        certify the sum (it diverges like ``t^{-1/2}`` at the origin).
    """
    return _evaluate(series, t, weighted=False)


@dataclass(frozen=True)
class Violation:
    order: int
    t: float
    value: float
    source: str  # "analytic" or "difference"


@dataclass(frozen=True)
class CMReport:
    max_order_checked: int
    violations: tuple

    @property
    def passed(self) -> bool:
        return not self.violations


def memory_derivative(series: DirichletSeries, t, k: int):
    """k-th derivative of the truncated memory function, from the series."""
    times = _as_times(t)
    values = _exp_sum(series.rates, series.weight, times, log_power=float(k))
    values = values * (-1.0) ** k
    return values if np.ndim(t) else float(values)


def _divided_difference(t: np.ndarray, f: np.ndarray):
    """Divided difference over all points and a rounding-error scale for it."""
    weights = np.array([1.0 / np.prod(t[j] - np.delete(t, j)) for j in range(t.size)])
    terms = weights * f
    return math.fsum(terms.tolist()), 8.0 * np.finfo(float).eps * float(np.sum(np.abs(terms)))


def cm_check(series: DirichletSeries, grid: TimeGrid, k_max: int) -> CMReport:
    """Sign pattern ``(-1)^k Phi^(k) > 0`` for k <= k_max on the grid.

    Besides the analytic derivatives, divided differences of Phi over
    consecutive grid points must alternate in sign (they equal
    ``Phi^(k)(xi) / k!`` for some xi), up to their rounding scale.
    """
    k_max = int(k_max)
    if not 0 <= k_max <= 8:
        raise DomainError(f"k_max must lie in [0, 8], got {k_max}")
    times = grid.times
    if times[0] < series.phi_t_min:
        raise DomainError(
            f"grid starts at {times[0]:g}, below the certified time {series.phi_t_min:g}"
        )
    violations = []
    for k in range(k_max + 1):
        values = memory_derivative(series, times, k)
        signed = values * (-1.0) ** k
        for t, v in zip(times[signed <= 0.0], values[signed <= 0.0]):
            violations.append(Violation(k, float(t), float(v), "analytic"))
    phi = memory_derivative(series, times, 0)
    for k in range(1, k_max + 1):
        for i in range(times.size - k):
            dd, scale = _divided_difference(times[i:i + k + 1], phi[i:i + k + 1])
            if (-1.0) ** k * dd < -scale:
                violations.append(Violation(k, float(times[i]), dd, "difference"))
    return CMReport(k_max, tuple(violations))
