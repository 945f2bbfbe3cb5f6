"""Warped products  g = dr^2 + psi(r)^2 g_N  over Einstein fibers.

The fiber is normalized so that Ric_N = (n - 2) kappa g_N, with kappa = 1 for
the unit round sphere and kappa = 0 for a flat torus.  With this
normalization the cone psi = r over the unit sphere is flat.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np
from scipy.interpolate import BSpline, CubicSpline

from .errors import (DimensionError, InvalidParametersError, OutOfDomainError,
                     UnsupportedChartError)
from .geometry import CoordinatePatch

CLOSED_FORM = "closed-form"
SAMPLED_SPLINE = "sampled-spline"
SAMPLED = "sampled"

_EDGE_SLACK = 1e-12


def _check_interval(interval):
    r0, r1 = (float(v) for v in interval)
    if not r1 > r0:
        raise InvalidParametersError(f"empty interval [{r0}, {r1}]")
    return r0, r1


def _in_interval(interval, r, what="r"):
    r0, r1 = interval
    slack = _EDGE_SLACK * max(1.0, abs(r0), abs(r1))
    if not (r0 - slack <= r <= r1 + slack):
        raise OutOfDomainError(f"{what}={r} outside [{r0}, {r1}]")


@dataclass(frozen=True)
class WarpingProfile:
    """The warping function psi with up to three derivatives.

    ``derivatives`` holds callables for psi, psi', psi'' and optionally psi'''.
    ``tag`` and ``parameters`` are what gets serialized.
    """

    derivatives: tuple
    interval: tuple
    representation: str = CLOSED_FORM
    tag: str = "custom"
    parameters: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "interval", _check_interval(self.interval))
        if len(self.derivatives) < 3:
            raise InvalidParametersError("a warping profile needs psi, psi' and psi''")
        if self.representation not in (CLOSED_FORM, SAMPLED_SPLINE):
            raise InvalidParametersError(f"unknown representation {self.representation!r}")

    @property
    def has_third_derivative(self) -> bool:
        return len(self.derivatives) > 3 and self.derivatives[3] is not None

    def __call__(self, r, k: int = 0) -> float:
        _in_interval(self.interval, r)
        if k >= len(self.derivatives) or self.derivatives[k] is None:
            raise InvalidParametersError(f"profile {self.tag!r} has no derivative of order {k}")
        return float(self.derivatives[k](r))

    def jet(self, r) -> tuple:
        """(psi, psi', psi'') at r, checking positivity of psi."""
        psi, d1, d2 = self(r), self(r, 1), self(r, 2)
        if psi <= 0:
            raise OutOfDomainError(f"warping function is not positive at r={r} (psi={psi})")
        return psi, d1, d2

    # constructors -------------------------------------------------------

    @classmethod
    def constant(cls, a: float, interval=(1e-2, 10.0)):
        a = float(a)
        zero = lambda r: 0.0
        return cls((lambda r: a, zero, zero, zero), interval, CLOSED_FORM, "constant", {"a": a})

    @classmethod
    def linear(cls, slope: float, offset: float = 0.0, interval=(1e-2, 10.0)):
        a, b = float(slope), float(offset)
        zero = lambda r: 0.0
        return cls((lambda r: a * r + b, lambda r: a, zero, zero), interval, CLOSED_FORM,
                   "linear", {"slope": a, "offset": b})

    @classmethod
    def sine(cls, amplitude: float = 1.0, frequency: float = 1.0, interval=(1e-2, 3.0)):
        """psi = A sin(w r); A = w = 1 is the round sphere."""
        A, w = float(amplitude), float(frequency)
        return cls((lambda r: A * math.sin(w * r),
                    lambda r: A * w * math.cos(w * r),
                    lambda r: -A * w * w * math.sin(w * r),
                    lambda r: -A * w ** 3 * math.cos(w * r)),
                   interval, CLOSED_FORM, "sine", {"amplitude": A, "frequency": w})

    @classmethod
    def polynomial(cls, coefficients: Sequence[float], interval=(1e-2, 10.0)):
        """psi = sum_k coefficients[k] r^k."""
        p = np.polynomial.Polynomial(np.asarray(coefficients, dtype=float))
        ders = tuple(p.deriv(k) for k in range(4))
        return cls(tuple((lambda r, q=q: float(q(r))) for q in ders), interval, CLOSED_FORM,
                   "polynomial", {"coefficients": [float(c) for c in p.coef]})

    @classmethod
    def trigonometric(cls, base: float, terms: Sequence[tuple], interval=(0.5, 2.0)):
        """psi = base + sum A_j sin(w_j r + p_j); used for randomized oracle checks."""
        terms = [tuple(float(v) for v in t) for t in terms]

        def make(k):
            def f(r):
                s = base if k == 0 else 0.0
                for A, w, p in terms:
                    s += A * w ** k * math.sin(w * r + p + k * math.pi / 2)
                return s
            return f

        return cls(tuple(make(k) for k in range(4)), interval, CLOSED_FORM, "trigonometric",
                   {"base": float(base), "terms": [list(t) for t in terms]})

    @classmethod
    def from_samples(cls, knots: Sequence[float], values: Sequence[float]):
        """Cubic spline through samples of psi; C^2, no psi''' (R' is differenced)."""
        knots = np.asarray(knots, dtype=float)
        values = np.asarray(values, dtype=float)
        cs = CubicSpline(knots, values)
        ders = tuple((lambda r, d=d: float(cs(r, d))) for d in range(3))
        return cls(ders, (knots[0], knots[-1]), SAMPLED_SPLINE, "cubic-spline",
                   {"knots": knots.tolist(), "values": values.tolist()})

    @classmethod
    def sampled_from(cls, profile: "WarpingProfile", count: int = 200, interval=None):
        lo, hi = interval or profile.interval
        knots = np.linspace(lo, hi, count)
        return cls.from_samples(knots, [profile(r) for r in knots])

    @classmethod
    def from_potential(cls, potential: "RadialField", c: float):
        """psi = F' exp(-c F), differentiated by the chain rule."""
        c = float(c)

        def jet(r):
            F, F1, F2, F3 = (potential(r, k) for k in range(4))
            return F, F1, F2, F3

        def psi(r):
            F, F1 = potential(r), potential(r, 1)
            return F1 * math.exp(-c * F)

        def d1(r):
            F, F1, F2 = potential(r), potential(r, 1), potential(r, 2)
            return (F2 - c * F1 * F1) * math.exp(-c * F)

        def d2(r):
            F, F1, F2, F3 = jet(r)
            return (F3 - 3 * c * F1 * F2 + c * c * F1 ** 3) * math.exp(-c * F)

        def d3(r):
            F, F1, F2, F3 = jet(r)
            F4 = potential(r, 4)
            return (F4 - 3 * c * F2 * F2 - 4 * c * F1 * F3 + 6 * c * c * F1 * F1 * F2
                    - c ** 3 * F1 ** 4) * math.exp(-c * F)

        return cls((psi, d1, d2, d3 if potential.levels > 4 else None), potential.interval, CLOSED_FORM, "from-potential",
                   {"c": c, "potential": potential.tag})


@dataclass(frozen=True)
class RadialField:
    """A radial potential F(r) with derivatives F', F'', F''' (and optionally F'''')."""

    derivatives: tuple
    interval: tuple
    representation: str = CLOSED_FORM
    tag: str = "custom"
    parameters: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "interval", _check_interval(self.interval))
        if len(self.derivatives) < 4 or any(d is None for d in self.derivatives[:4]):
            raise InvalidParametersError("a radial field needs F, F', F'' and F'''")

    @property
    def levels(self) -> int:
        """Number of derivative levels available (F counts as one)."""
        n = 0
        for d in self.derivatives:
            if d is None:
                break
            n += 1
        return n

    def __call__(self, r, k: int = 0) -> float:
        _in_interval(self.interval, r)
        if k >= self.levels:
            raise InvalidParametersError(f"field {self.tag!r} has no derivative of order {k}")
        return float(self.derivatives[k](r))

    def jet(self, r, levels: int = 4) -> np.ndarray:
        return np.array([self(r, k) for k in range(levels)])

    def consistency_defect(self, r, h: float = 1e-3) -> float:
        """Largest relative mismatch between a derivative and the FD of the level below."""
        lo, hi = self.interval
        if r - 2 * h < lo or r + 2 * h > hi:
            raise OutOfDomainError(f"r={r} too close to the interval ends for the check")
        worst = 0.0
        for k in range(self.levels - 1):
            f = lambda s: self(s, k)
            fd = (f(r - 2 * h) - 8 * f(r - h) + 8 * f(r + h) - f(r + 2 * h)) / (12 * h)
            exact = self(r, k + 1)
            worst = max(worst, abs(fd - exact) / max(1.0, abs(exact)))
        return worst

    # constructors -------------------------------------------------------

    @classmethod
    def polynomial(cls, coefficients: Sequence[float], interval=(1e-2, 10.0), tag="polynomial"):
        """F = sum_k coefficients[k] r^k with all derivatives exact."""
        p = np.polynomial.Polynomial(np.asarray(coefficients, dtype=float))
        ders = tuple(p.deriv(k) for k in range(5))
        return cls(tuple((lambda r, q=q: float(q(r))) for q in ders), interval, CLOSED_FORM,
                   tag, {"coefficients": [float(c) for c in p.coef]})

    @classmethod
    def from_bspline(cls, spline: BSpline, interval=None, tag="spline"):
        """Potential given as a B-spline; degree >= 4 keeps F'''' continuous."""
        if spline.k < 3:
            raise InvalidParametersError("spline potentials need degree >= 3")
        ders = [spline] + [spline.derivative(j) for j in range(1, min(spline.k, 4) + 1)]
        t = spline.t
        lo, hi = interval or (t[spline.k], t[-spline.k - 1])
        return cls(tuple((lambda r, s=s: float(s(r))) for s in ders), (lo, hi), SAMPLED, tag,
                   {"degree": int(spline.k), "knots": t.tolist(), "coefficients": spline.c.tolist()})


class FiberSpec(NamedTuple):
    """Einstein fiber of dimension n - 1 with Ric = (n - 2) kappa g."""

    dimension: int
    kappa: float = 1.0
    preset: str = "sphere"

    @classmethod
    def sphere(cls, dimension: int):
        return cls(int(dimension), 1.0, "sphere").validated()

    @classmethod
    def flat(cls, dimension: int):
        return cls(int(dimension), 0.0, "flat").validated()

    @classmethod
    def einstein(cls, dimension: int, kappa: float):
        return cls(int(dimension), float(kappa), "einstein").validated()

    def validated(self) -> "FiberSpec":
        if self.dimension < 1:
            raise DimensionError("fiber dimension must be >= 1")
        pinned = {"sphere": 1.0, "flat": 0.0}
        if self.preset in pinned and self.kappa != pinned[self.preset]:
            raise InvalidParametersError(f"preset {self.preset!r} requires kappa={pinned[self.preset]}")
        if self.preset not in ("sphere", "flat", "einstein"):
            raise InvalidParametersError(f"unknown fiber preset {self.preset!r}")
        return self


@dataclass(frozen=True)
class WarpedMetric:
    warping: WarpingProfile
    fiber: FiberSpec

    def __post_init__(self):
        self.fiber.validated()

    @property
    def dimension(self) -> int:
        return self.fiber.dimension + 1

    @property
    def interval(self):
        return self.warping.interval


# closed-form curvature -------------------------------------------------------

def ricci_radial(W: WarpedMetric, r) -> float:
    """Ric(d_r, d_r) = -(n - 1) psi'' / psi."""
    psi, _, d2 = W.warping.jet(r)
    return -(W.dimension - 1) * d2 / psi


def ricci_fiber(W: WarpedMetric, r) -> float:
    """Ricci eigenvalue on unit fiber directions."""
    n, kappa = W.dimension, W.fiber.kappa
    psi, d1, d2 = W.warping.jet(r)
    return -d2 / psi + (n - 2) * (kappa - d1 * d1) / (psi * psi)


def scalar_curvature(W: WarpedMetric, r) -> float:
    n, kappa = W.dimension, W.fiber.kappa
    psi, d1, d2 = W.warping.jet(r)
    return -2 * (n - 1) * d2 / psi + (n - 1) * (n - 2) * (kappa - d1 * d1) / (psi * psi)


def _one_sided_safe_derivative(f, interval, r, h):
    lo, hi = interval
    if r - 2 * h >= lo and r + 2 * h <= hi:
        return (f(r - 2 * h) - 8 * f(r - h) + 8 * f(r + h) - f(r + 2 * h)) / (12 * h)
    s = 1.0 if r - 2 * h < lo else -1.0
    if not (lo <= r + 4 * s * h <= hi):
        raise OutOfDomainError(f"interval too short to difference at r={r}")
    v = [f(r + s * j * h) for j in range(5)]
    return s * (-25 * v[0] + 48 * v[1] - 36 * v[2] + 16 * v[3] - 3 * v[4]) / (12 * h)


def _fallback_step(W):
    lo, hi = W.interval
    return min(1e-3, (hi - lo) / 16)


class ScalarCurvature(NamedTuple):
    R: float
    dR: float


def scalar_and_derivative(W: WarpedMetric, r) -> ScalarCurvature:
    """Scalar curvature and its radial derivative.

    Profiles without psi''' get dR by differencing R; check
    ``W.warping.has_third_derivative`` to know which path was taken.
    """
    R = scalar_curvature(W, r)
    if not W.warping.has_third_derivative:
        dR = _one_sided_safe_derivative(lambda s: scalar_curvature(W, s), W.interval, r, _fallback_step(W))
        return ScalarCurvature(R, dR)
    n, kappa = W.dimension, W.fiber.kappa
    psi, d1, d2 = W.warping.jet(r)
    d3 = W.warping(r, 3)
    dR = (-2 * (n - 1) * (d3 / psi - d2 * d1 / psi ** 2)
          + (n - 1) * (n - 2) * (-2 * d1 * d2 / psi ** 2 - 2 * (kappa - d1 * d1) * d1 / psi ** 3))
    return ScalarCurvature(R, dR)


def ricci_radial_derivative(W: WarpedMetric, r) -> float:
    """d/dr of Ric(d_r, d_r); differenced when psi''' is unavailable."""
    if not W.warping.has_third_derivative:
        return _one_sided_safe_derivative(lambda s: ricci_radial(W, s), W.interval, r, _fallback_step(W))
    psi, d1, d2 = W.warping.jet(r)
    d3 = W.warping(r, 3)
    return -(W.dimension - 1) * (d3 / psi - d2 * d1 / psi ** 2)


def radial_hessian(W: WarpedMetric, F: RadialField, r):
    """(Hess F(d_r, d_r), Hess F(e, e)) for a unit fiber vector e."""
    psi, d1, _ = W.warping.jet(r)
    return F(r, 2), F(r, 1) * d1 / psi


def radial_laplacian(W: WarpedMetric, F: RadialField, r) -> float:
    psi, d1, _ = W.warping.jet(r)
    return F(r, 2) + (W.dimension - 1) * d1 / psi * F(r, 1)


# coordinate realization ------------------------------------------------------

# chart name -> (fiber preset, fiber dimension or None for any)
CHARTS = {
    "circle": ("sphere", 1),
    "sphere2": ("sphere", 2),
    "sphere3": ("sphere", 3),
    "torus": ("flat", None),
}

_DEFAULT_ANGLES = {
    "circle": (2.0,),
    "sphere2": (1.1, 2.0),
    "sphere3": (1.1, 1.3, 2.0),
}


def _fiber_metric(chart, dim):
    if chart == "circle":
        return lambda y: np.ones(1)
    if chart == "sphere2":
        return lambda y: np.array([1.0, math.sin(y[0]) ** 2])
    if chart == "sphere3":
        return lambda y: np.array([1.0, math.sin(y[0]) ** 2, (math.sin(y[0]) * math.sin(y[1])) ** 2])
    return lambda y: np.ones(dim)


def _fiber_box(chart, dim):
    if chart == "circle":
        return [(0.0, 2 * math.pi)]
    if chart == "sphere2":
        return [(0.0, math.pi), (0.0, 2 * math.pi)]
    if chart == "sphere3":
        return [(0.0, math.pi), (0.0, math.pi), (0.0, 2 * math.pi)]
    return [(0.0, 2 * math.pi)] * dim


def default_chart(fiber: FiberSpec) -> str:
    for name, (preset, dim) in CHARTS.items():
        if preset == fiber.preset and dim in (None, fiber.dimension):
            return name
    raise UnsupportedChartError(f"no built-in chart for a {fiber.dimension}-dimensional {fiber.preset} fiber")


def to_patch(W: WarpedMetric, chart: Optional[str] = None, margin: float = 0.05) -> CoordinatePatch:
    """Coordinates (r, fiber angles...) with metric dr^2 + psi(r)^2 g_chart."""
    chart = chart or default_chart(W.fiber)
    if chart not in CHARTS:
        raise UnsupportedChartError(f"unknown chart {chart!r}")
    preset, dim = CHARTS[chart]
    if preset != W.fiber.preset or dim not in (None, W.fiber.dimension):
        raise UnsupportedChartError(
            f"chart {chart!r} does not fit a {W.fiber.dimension}-dimensional {W.fiber.preset} fiber")
    fdim = W.fiber.dimension
    fiber_diag = _fiber_metric(chart, fdim)
    psi = W.warping

    def metric(x):
        return np.diag(np.concatenate(([1.0], psi(x[0]) ** 2 * fiber_diag(x[1:]))))

    return CoordinatePatch(metric, [W.interval] + _fiber_box(chart, fdim), margin)


def patch_point(W: WarpedMetric, r, chart: Optional[str] = None) -> np.ndarray:
    """A point at radius r with fiber angles well away from chart singularities."""
    chart = chart or default_chart(W.fiber)
    angles = _DEFAULT_ANGLES.get(chart, (1.0,) * W.fiber.dimension)
    return np.array((float(r),) + tuple(angles))
