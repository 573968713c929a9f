"""Acceptance criteria shared by the test suite and the ``verify`` command.

Each check returns a :class:`CriterionResult`; a criterion passes only if its
numerical condition holds and it finishes inside its time budget.
"""

from __future__ import annotations

import math
import time
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bessel_kernel import laplace_image
from .grids import SignalTrace, TimeGrid
from .ladder_response import convolve_response, step_response
from .rayleigh_sums import (
    bessel_ratio_direct,
    calogero_limit_check,
    calogero_ratio_series,
    convergence_diagnostics,
    rayleigh_closed_form,
    rayleigh_partial_sum,
)
from .relaxation_series import build_series, cm_check, creep_F, memory_Phi
from .transform_oracle import InversionConfig, forward_image_of_truncation, oracle_compare
from .zero_finder import zero_table


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    runtime: float
    budget: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] {self.number:2d} {self.name}: {self.detail} "
            f"({self.runtime:.3f}s / {self.budget:g}s)"
        )


def _timed(number: int, name: str, budget: float, body: Callable[[], tuple[bool, str]]):
    start = time.perf_counter()
    ok, detail = body()
    runtime = time.perf_counter() - start
    return CriterionResult(number, name, bool(ok and runtime <= budget), detail, runtime, budget)


def rayleigh_identity() -> CriterionResult:
    def body():
        worst = 0.0
        for nu in (-0.5, -0.1, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0):
            est = rayleigh_partial_sum(zero_table(nu, 500))
            worst = max(worst, abs(est.total - rayleigh_closed_form(nu)))
        return worst <= 1e-6, f"max |S - 1/(4(nu+1))| = {worst:.3e}"

    return _timed(1, "rayleigh identity", 2.0, body)


def half_integer_anchors() -> CriterionResult:
    def body():
        n = np.arange(1, 101)
        err_half = np.max(np.abs(zero_table(0.5, 100).zeros - n * math.pi))
        err_neg = np.max(np.abs(zero_table(-0.5, 100).zeros - (n - 0.5) * math.pi))
        sums = [
            abs(rayleigh_partial_sum(zero_table(nu, 100)).total - target)
            for nu, target in ((0.5, 1.0 / 6.0), (-0.5, 0.5))
        ]
        ok = err_half <= 1e-12 and err_neg <= 1e-12 and max(sums) <= 1e-6
        return ok, (
            f"zero errors {err_half:.2e}, {err_neg:.2e}; "
            f"sum errors {sums[0]:.2e}, {sums[1]:.2e}"
        )

    return _timed(2, "half-integer anchors", 1.0, body)


def calogero_limit() -> CriterionResult:
    def body():
        worst = max(
            abs(calogero_limit_check(nu) - rayleigh_closed_form(nu)) for nu in (-0.9, 0.0, 1.0, 4.0)
        )
        return worst <= 1e-10, f"max limit error = {worst:.3e}"

    return _timed(3, "calogero limit", 1.0, body)


def partial_fraction_identity() -> CriterionResult:
    def body():
        worst = 0.0
        for nu in (0.0, 1.3):
            table = zero_table(nu, 2000)
            xs = np.linspace(0.0, table.zeros[4], 52)[1:-1]
            xs = [x for x in xs if np.min(np.abs(table.zeros - x)) > 1e-6]
            for x in xs:
                err = abs(calogero_ratio_series(nu, x, table) - bessel_ratio_direct(nu, x))
                worst = max(worst, err)
        return worst <= 1e-5, f"max |series - direct| = {worst:.3e}"

    return _timed(4, "partial-fraction identity", 5.0, body)


def inversion_oracle() -> CriterionResult:
    def body():
        grid = TimeGrid.geometric(0.01, 2.0, 20)
        config = InversionConfig(term_count=16)
        worst = 0.0
        for nu in (-0.5, 0.0, 1.0, 3.0):
            report = oracle_compare(nu, grid, build_series(nu, 1e-5, 0.01), config)
            worst = max(worst, report.max_abs_err)
        return worst <= 1e-4, f"max |F - GS| = {worst:.3e}"

    return _timed(5, "inversion oracle", 5.0, body)


def forward_image_identity() -> CriterionResult:
    def body():
        tail_tol = 1e-5
        worst = 0.0
        for nu in (-0.5, 0.0, 1.0, 3.0):
            series = build_series(nu, tail_tol, 0.01)
            for s in np.geomspace(1e-2, 1e4, 60):
                gap = abs(forward_image_of_truncation(series, s) - laplace_image(nu, s))
                worst = max(worst, gap * s / tail_tol)
        return worst <= 1.0, f"max s|gap|/tail_tol = {worst:.3e}"

    return _timed(6, "forward-image identity", 2.0, body)


def small_time_asymptotics() -> CriterionResult:
    def body():
        parts = []
        ok = True
        for nu in (-0.5, 0.0, 1.0, 3.0):
            series = build_series(nu, 1e-4, 1e-6)
            t = 1e-6
            f_ratio = creep_F(series, t) / (4.0 * (nu + 1.0) * math.sqrt(t / math.pi))
            t = 1e-4
            phi_ratio = memory_Phi(series, t) * math.sqrt(t) * math.sqrt(math.pi) / (2.0 * (nu + 1.0))
            ok &= 0.98 <= f_ratio <= 1.02 and 0.98 <= phi_ratio <= 1.02
            parts.append(f"nu={nu:g}: F {f_ratio:.4f}, Phi {phi_ratio:.4f}")
        return ok, "; ".join(parts)

    return _timed(7, "small-t asymptotics", 2.0, body)


def complete_monotonicity() -> CriterionResult:
    def body():
        grid = TimeGrid.geometric(1e-3, 10.0, 50)
        counts = []
        for nu in (0.0, 2.0):
            report = cm_check(build_series(nu, 1e-4, 1e-3), grid, 6)
            counts.append(len(report.violations))
        return not any(counts), f"violations per order set: {counts}"

    return _timed(8, "complete monotonicity", 2.0, body)


def step_response_consistency() -> CriterionResult:
    def body():
        tail_tol = 1e-5
        series = build_series(0.0, tail_tol, 0.01)
        grid = TimeGrid.linear(0.0, 5.0, 200)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            step = convolve_response(series, SignalTrace(grid, np.ones(200)))
            ref = step_response(series, TimeGrid(grid.times[1:]))
            gap = max(abs(step.values[0] - 1.0), float(np.max(np.abs(step.values[1:] - ref.values))))

            rng = np.random.default_rng(7)
            v1 = rng.standard_normal(200)
            v2 = np.sin(grid.times)
            combo = convolve_response(series, SignalTrace(grid, 2.5 * v1 - 0.75 * v2)).values
            parts = 2.5 * convolve_response(series, SignalTrace(grid, v1)).values
            parts -= 0.75 * convolve_response(series, SignalTrace(grid, v2)).values
            linear_gap = float(np.max(np.abs(combo - parts)))

            bumped = v1.copy()
            bumped[150] += 1.0
            base = convolve_response(series, SignalTrace(grid, v1)).values
            late = convolve_response(series, SignalTrace(grid, bumped)).values
            causal = bool(np.array_equal(base[:150], late[:150]))
        ok = gap <= 1e-5 + tail_tol and linear_gap <= 1e-12 and causal
        return ok, f"step gap {gap:.3e}, linearity gap {linear_gap:.1e}, causal {causal}"

    return _timed(9, "step response", 2.0, body)


def dirichlet_diagnostics() -> CriterionResult:
    def body():
        parts = []
        ok = True
        for nu in (0.0, 0.5, 2.0):
            table = zero_table(nu, 1000)
            diag = convergence_diagnostics(nu, table)
            monotone = bool(np.all(np.diff(diag.d_values[2:]) < 0.0))
            ok &= diag.d_estimate <= 1e-3 and diag.sigma_estimate <= 1e-3 and monotone
            parts.append(f"nu={nu:g}: d {diag.d_estimate:.2e}, sigma {diag.sigma_estimate:.2e}")
        return ok, "; ".join(parts)

    return _timed(10, "convergence diagnostics", 2.0, body)


CRITERIA = (
    rayleigh_identity,
    half_integer_anchors,
    calogero_limit,
    partial_fraction_identity,
    inversion_oracle,
    forward_image_identity,
    small_time_asymptotics,
    complete_monotonicity,
    step_response_consistency,
    dirichlet_diagnostics,
)


def run_all() -> list[CriterionResult]:
    return [check() for check in CRITERIA]
