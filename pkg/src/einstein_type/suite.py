"""Randomized potentials for property checks and parameter sweeps."""
from __future__ import annotations

import numpy as np
from scipy.interpolate import BSpline

from .warped import RadialField, WarpingProfile

SUITE_C_VALUES = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0)


def random_spline_potential(rng: np.random.Generator, interval=(0.5, 2.0), inner_knots: int = 6,
                            slope_range=(0.5, 1.5), offset_range=(-0.5, 0.5)) -> RadialField:
    """Quintic spline potential with F' > 0.

    F' is a quartic B-spline with positive coefficients (hence positive),
    and F is its antiderivative shifted by a random constant.
    """
    lo, hi = interval
    k = 4
    spacing = (hi - lo) / (inner_knots + 1)
    inner = lo + spacing * (np.arange(1, inner_knots + 1) + rng.uniform(-0.25, 0.25, inner_knots))
    t = np.concatenate([[lo] * (k + 1), inner, [hi] * (k + 1)])
    coef = rng.uniform(*slope_range, len(t) - k - 1)
    slope = BSpline(t, coef, k)
    F = slope.antiderivative()
    F = BSpline(F.t, F.c + rng.uniform(*offset_range), F.k)
    return RadialField.from_bspline(F, interval)


def spline_suite(count: int = 60, seed: int = 0, interval=(0.5, 2.0)):
    """``count`` (potential, c) pairs cycling through SUITE_C_VALUES."""
    rng = np.random.default_rng(seed)
    return [(random_spline_potential(rng, interval), SUITE_C_VALUES[i % len(SUITE_C_VALUES)])
            for i in range(count)]


def random_trigonometric_profile(rng: np.random.Generator, interval=(0.5, 2.0), terms: int = 3):
    """Smooth positive warping function: base + small sinusoids."""
    base = rng.uniform(1.0, 2.0)
    amp_total = 0.0
    spec = []
    for _ in range(terms):
        A = rng.uniform(-0.3, 0.3)
        amp_total += abs(A)
        spec.append((A, rng.uniform(0.5, 3.0), rng.uniform(0, 2 * np.pi)))
    assert base - amp_total > 0
    return WarpingProfile.trigonometric(base, spec, interval)
