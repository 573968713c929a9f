"""Trigamma function for positive real arguments."""

from __future__ import annotations

import math

from .errors import DomainError

# Bernoulli numbers B_2, B_4, ..., B_16
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)
_ASYMPTOTIC_FROM = 12.0


def trigamma(z: float) -> float:
    """psi'(z) = sum_{k>=0} 1/(z+k)^2 for z > 0.

    Upward recurrence ``psi'(z) = 1/z^2 + psi'(z+1)`` moves the argument past
    12, then the Bernoulli asymptotic series
    ``1/z + 1/(2z^2) + sum_k B_2k / z^(2k+1)`` takes over.
    """
    z = float(z)
    if not z > 0.0 or not math.isfinite(z):
        raise DomainError(f"trigamma implemented for finite z > 0, got {z!r}")
    head = 0.0
    while z < _ASYMPTOTIC_FROM:
        head += 1.0 / (z * z)
        z += 1.0
    inv = 1.0 / z
    inv2 = inv * inv
    tail = 0.0
    power = inv * inv2  # 1 / z^3
    for b in _BERNOULLI:
        tail += b * power
        power *= inv2
    return head + inv + 0.5 * inv2 + tail
