"""Dirichlet series over Bessel zeros: kernels, zeros, sums, relaxation and response."""

from .bessel_kernel import (
    EvalResult,
    Order,
    bessel_i_scaled,
    bessel_j,
    laplace_image,
    modified_ratio,
)
from .errors import ConvergenceError, DomainError, PoleError, ResourceError
from .grids import SignalTrace, TimeGrid
from .ladder_response import (
    PronyModel,
    UnderResolvedWarning,
    convolve_response,
    prony_export,
    step_response,
)
from .rayleigh_sums import (
    ConvergenceDiagnostics,
    SumEstimate,
    bessel_ratio_direct,
    calogero_limit_check,
    calogero_ratio_series,
    convergence_diagnostics,
    rayleigh_closed_form,
    rayleigh_partial_sum,
)
from .relaxation_series import (
    CMReport,
    DirichletSeries,
    build_series,
    cm_check,
    creep_F,
    memory_Phi,
    relaxation_G,
)
from .transform_oracle import (
    DiagnosticsReport,
    InversionConfig,
    forward_image_of_truncation,
    gaver_stehfest_invert,
    oracle_compare,
)
from .zero_finder import ZeroTable, mcmahon_guess, refine_zero, zero_table

__version__ = "0.1.0"
