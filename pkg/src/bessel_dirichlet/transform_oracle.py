"""Independent checks of the Dirichlet series against its Laplace image.

Two routes are compared with the series evaluation:

* Gaver-Stehfest inversion of the closed-form image on the real axis, and
* the term-by-term forward transform of the truncated series,
  ``1/s - sum a_n / (s + alpha_n)``, against the closed-form image.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

from .bessel_kernel import as_order, laplace_image
from .errors import DomainError
from .grids import TimeGrid
from .relaxation_series import DirichletSeries, creep_F

LN2 = math.log(2.0)


@dataclass(frozen=True)
class InversionConfig:
    term_count: int = 16
    t_range: tuple[float, float] = (0.01, 2.0)

    def __post_init__(self):
        m = self.term_count
        if not isinstance(m, (int, np.integer)) or m % 2 or not 4 <= m <= 20:
            raise DomainError(f"term_count must be an even integer in [4, 20], got {m!r}")
        lo, hi = self.t_range
        if not 0.0 < lo <= hi:
            raise DomainError(f"t_range must satisfy 0 < lo <= hi, got {self.t_range!r}")


@lru_cache(maxsize=None)
def stehfest_weights(m: int) -> tuple[float, ...]:
    """Stehfest weights V_1..V_m, summed exactly in rationals then rounded."""
    half = m // 2
    weights = []
    for k in range(1, m + 1):
        acc = Fraction(0)
        for j in range((k + 1) // 2, min(k, half) + 1):
            acc += Fraction(
                j**half * math.factorial(2 * j),
                math.factorial(half - j)
                * math.factorial(j)
                * math.factorial(j - 1)
                * math.factorial(k - j)
                * math.factorial(2 * j - k),
            )
        weights.append(float((-1) ** (k + half) * acc))
    return tuple(weights)


def gaver_stehfest_invert(
    image: Callable[[float], float], t: float, config: InversionConfig = InversionConfig()
) -> float:
    """Gaver-Stehfest estimate of f(t) from its Laplace image on s > 0.

    Raises
    ------
    OverflowError
        If the image returns a non-finite value at one of the nodes.
    """
    t = float(t)
    if not (t > 0.0 and math.isfinite(t)):
        raise DomainError(f"inversion needs finite t > 0, got {t!r}")
    scale = LN2 / t
    terms = []
    for k, w in enumerate(stehfest_weights(config.term_count), start=1):
        value = image(k * scale)
        if not math.isfinite(value):
            raise OverflowError(f"image is not finite at s={k * scale:g}")
        terms.append(w * value)
    return scale * math.fsum(terms)


@dataclass(frozen=True)
class DiagnosticsReport:
    nu: float
    t_values: np.ndarray
    series_values: np.ndarray
    inverted_values: np.ndarray
    max_abs_err: float
    mean_abs_err: float
    tolerance: float
    failures: tuple  # times where |series - inverted| > tolerance

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "nu": self.nu,
            "t_values": self.t_values.tolist(),
            "series_values": self.series_values.tolist(),
            "inverted_values": self.inverted_values.tolist(),
            "max_abs_err": self.max_abs_err,
            "mean_abs_err": self.mean_abs_err,
        }


def oracle_compare(
    order,
    grid: TimeGrid,
    series: DirichletSeries,
    config: InversionConfig = InversionConfig(),
    tolerance: float = 1e-4,
) -> DiagnosticsReport:
    """Compare the series creep function with the inverted closed-form image."""
    nu = as_order(order).nu
    if series.nu != nu:
        raise DomainError(f"series is for nu={series.nu}, not nu={nu}")
    times = grid.times
    if times[0] <= 0.0:
        raise DomainError("oracle comparison needs t > 0")
    from_series = np.asarray(creep_F(series, times), dtype=float)
    inverted = np.array(
        [gaver_stehfest_invert(lambda s: laplace_image(nu, s), t, config) for t in times]
    )
    err = np.abs(from_series - inverted)
    failures = tuple(float(t) for t in times[err > tolerance])
    return DiagnosticsReport(
        nu=nu,
        t_values=times.copy(),
        series_values=from_series,
        inverted_values=inverted,
        max_abs_err=float(err.max()),
        mean_abs_err=float(err.mean()),
        tolerance=tolerance,
        failures=failures,
    )


def forward_image_of_truncation(series: DirichletSeries, s: float) -> float:
    """Laplace transform of the truncated creep series, ``1/s - sum a_n/(s + alpha_n)``."""
    s = float(s)
    if not (s > 0.0 and math.isfinite(s)):
        raise DomainError(f"forward image needs finite s > 0, got {s!r}")
    return 1.0 / s - float(np.sum(series.amplitudes / (s + series.rates)))
