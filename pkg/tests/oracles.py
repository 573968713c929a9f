"""High-precision reference values computed with mpmath."""

import mpmath as mp

mp.mp.dps = 40


def j(nu, x):
    return float(mp.besselj(nu, x))


def i_scaled(nu, x):
    x = mp.mpf(x)
    return float(mp.besseli(nu, x) * mp.exp(-x))


def zero(nu, a, b):
    """Zero of J_nu in [a, b] by bisection at 40 digits."""
    a, b = mp.mpf(a), mp.mpf(b)
    fa = mp.besselj(nu, a)
    for _ in range(200):
        m = (a + b) / 2
        fm = mp.besselj(nu, m)
        if fa * fm <= 0:
            b = m
        else:
            a, fa = m, fm
        if b - a < mp.mpf(10) ** -30:
            break
    return float((a + b) / 2)


def image(nu, s):
    r = mp.sqrt(mp.mpf(s))
    return float(2 * (nu + 1) / (s * r) * mp.besseli(nu + 1, r) / mp.besseli(nu, r))


def creep(nu, t):
    """Talbot inversion of the image at t."""
    f = lambda s: 2 * (nu + 1) / (s * mp.sqrt(s)) * mp.besseli(nu + 1, mp.sqrt(s)) / mp.besseli(nu, mp.sqrt(s))
    return float(mp.invertlaplace(f, t, method="talbot"))


def memory(nu, t):
    """Talbot inversion of s times the image, the derivative of the creep function."""
    f = lambda s: 2 * (nu + 1) / mp.sqrt(s) * mp.besseli(nu + 1, mp.sqrt(s)) / mp.besseli(nu, mp.sqrt(s))
    return float(mp.invertlaplace(f, t, method="talbot"))
