"""Sums over Bessel zeros: sum 1/j^2, the partial-fraction ratio, diagnostics.

The tail of ``sum_{n>N} 1/j_{nu,n}^2`` is estimated with the McMahon
surrogate ``j_{nu,n} ~ (n + nu/2 - 1/4) pi``, whose tail sum is a trigamma
value.  Integral comparison brackets the surrogate tail; a cubic allowance
covers the gap between the surrogate and the true zeros.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel_kernel import as_order, bessel_j_pair
from .errors import DomainError, PoleError
from .special import trigamma
from .zero_finder import ZeroTable

_PI2 = math.pi**2


@dataclass(frozen=True)
class SumEstimate:
    partial_sum: float
    tail_estimate: float
    tail_bound: float
    n_terms: int
    tail_lower: float
    tail_upper: float

    @property
    def total(self) -> float:
        return self.partial_sum + self.tail_estimate


@dataclass(frozen=True)
class ConvergenceDiagnostics:
    """Finite-N readings of the limsup quantities ``ln n / alpha_n`` and
    ``ln|a_n| / alpha_n`` for ``a_n = 1/j^2``, ``alpha_n = j^2``.

    The estimates are suprema over the final 10% of indices, so they are
    estimates of the limsup, not the limsup itself.
    """

    indices: np.ndarray
    d_values: np.ndarray
    sigma_values: np.ndarray
    d_estimate: float
    sigma_estimate: float

    @property
    def d_sequence(self):
        return list(zip(self.indices.tolist(), self.d_values.tolist()))

    @property
    def sigma_sequence(self):
        return list(zip(self.indices.tolist(), self.sigma_values.tolist()))


def rayleigh_closed_form(order) -> float:
    """``sum_n 1/j_{nu,n}^2 = 1 / (4 (nu + 1))``."""
    return 1.0 / (4.0 * (as_order(order).nu + 1.0))


def mcmahon_allowance(nu: float, n_terms: int) -> float:
    """Bound on |true tail - surrogate tail| after ``n_terms`` zeros.

    The leading discrepancy is ``|4nu^2 - 1| / (12 pi^4 (N + c)^3)``; the
    allowance doubles it and inflates it where N is not yet large next to nu.
    """
    shift = n_terms + 0.5 * nu - 0.25
    lead = abs(4.0 * nu * nu - 1.0) / (6.0 * math.pi**4 * shift**3)
    return lead * (1.0 + (nu / shift) ** 2)


def tail_bracket(nu: float, n_terms: int) -> tuple[float, float, float]:
    """``(estimate, lower, upper)`` for ``sum_{n > n_terms} 1/j_{nu,n}^2``."""
    shift = n_terms + 0.5 * nu - 0.25
    estimate = trigamma(shift + 1.0) / _PI2
    allowance = mcmahon_allowance(nu, n_terms)
    lower = 1.0 / (_PI2 * (shift + 1.0)) - allowance
    upper = 1.0 / (_PI2 * shift) + allowance
    return estimate, max(lower, 0.0), upper


def rayleigh_partial_sum(table: ZeroTable) -> SumEstimate:
    """Truncated ``sum 1/j^2`` over the table plus a bracketed tail estimate."""
    n_terms = len(table)
    partial = math.fsum((1.0 / table.zeros**2).tolist())
    estimate, lower, upper = tail_bracket(table.nu, n_terms)
    bound = max(upper - estimate, estimate - lower)
    return SumEstimate(partial, estimate, bound, n_terms, lower, upper)


def bessel_ratio_direct(order, x: float) -> float:
    """``J_{nu+1}(x) / J_nu(x)`` straight from the kernel.

    Raises
    ------
    PoleError
        If ``|J_nu(x)|`` is below ``1e-14`` of the local scale.
    """
    nu = as_order(order).nu
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"bessel_ratio_direct requires x > 0, got {x!r}")
    j_nu, j_nu1 = bessel_j_pair(nu, x)
    if abs(j_nu) < 1e-14 * (abs(j_nu) + abs(j_nu1)):
        raise PoleError(f"x={x} is at a zero of J_{nu}")
    return j_nu1 / j_nu


def calogero_ratio_series(order, x: float, table: ZeroTable) -> float:
    """Partial-fraction form ``sum_n 2x / (j_n^2 - x^2)`` with tail correction.

    The tail beyond the table uses the McMahon surrogate:
    ``2x [psi'(N+1+c) + (x/pi)^2 zeta(4, N+1+c)] / pi^2``.
    """
    nu = as_order(order).nu
    if table.nu != nu:
        raise DomainError(f"table is for nu={table.nu}, not nu={nu}")
    x = float(x)
    zeros = table.zeros
    if not 0.0 < x < zeros[-1]:
        raise DomainError(f"x must lie in (0, {zeros[-1]}), got {x!r}")
    gap = np.min(np.abs(zeros - x))
    if gap < 1e-8:
        raise PoleError(f"x={x} is within {gap:.1e} of a tabulated zero")
    terms = 2.0 * x / ((zeros - x) * (zeros + x))
    head = math.fsum(terms.tolist())
    a = len(table) + 0.5 * nu - 0.25 + 1.0
    # zeta(4, a) ~ 1/(3 a^3) + 1/(2 a^4); second tail term is tiny
    zeta4 = 1.0 / (3.0 * a**3) + 1.0 / (2.0 * a**4)
    tail = 2.0 * x * (trigamma(a) + (x / math.pi) ** 2 * zeta4) / _PI2
    return head + tail


def calogero_limit_check(order, points=(1e-2, 1e-3, 1e-4)) -> float:
    """Limit of ``J_{nu+1}(x) / (2x J_nu(x))`` as x -> 0.

    The quotient is even in x, so the three samples are extrapolated to
    zero by a quadratic in ``h = x^2`` (Neville).
    """
    nu = as_order(order).nu
    h = [x * x for x in points]
    f = [bessel_ratio_direct(nu, x) / (2.0 * x) for x in points]
    # Neville's scheme evaluated at h = 0
    p = list(f)
    m = len(h)
    for level in range(1, m):
        for i in range(m - level):
            j = i + level
            p[i] = (h[j] * p[i] - h[i] * p[i + 1]) / (h[j] - h[i])
    return p[0]


def convergence_diagnostics(order, table: ZeroTable) -> ConvergenceDiagnostics:
    """Sequences ``ln n / j^2`` and ``ln(1/j^2) / j^2`` with tail-window suprema."""
    nu = as_order(order).nu
    if table.nu != nu:
        raise DomainError(f"table is for nu={table.nu}, not nu={nu}")
    if len(table) < 10:
        raise DomainError("convergence diagnostics need at least 10 zeros")
    n = np.arange(1, len(table) + 1)
    alpha = table.zeros**2
    d_values = np.log(n) / alpha
    sigma_values = -np.log(alpha) / alpha
    window = max(1, math.ceil(0.1 * n.size))
    return ConvergenceDiagnostics(
        indices=n,
        d_values=d_values,
        sigma_values=sigma_values,
        d_estimate=float(np.max(d_values[-window:])),
        sigma_estimate=float(np.max(sigma_values[-window:])),
    )
