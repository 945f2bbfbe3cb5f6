"""Residuals of the gradient Einstein-type equation with alpha = 0.

After dividing by beta the equation reads

    Hess F = phi g + c dF (x) dF,      c = -mu / beta,

with phi the beta-reduced conformal factor.  For a radial potential on a
warped product every tensor in play is diagonal in the (d_r, fiber) split, so
each identity reduces to one or two scalar functions of r.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Optional, Sequence

import numpy as np
from scipy.linalg import eigh

from .errors import (BetaZeroError, DimensionError, InsufficientSmoothnessError,
                     IntervalMismatchError, InvalidParametersError)
from .geometry import CurvaturePack
from .warped import (RadialField, WarpedMetric, ricci_fiber, ricci_radial,
                     ricci_radial_derivative, scalar_and_derivative)


class LambdaMode(str, Enum):
    CONSTANT = "constant"
    FUNCTION = "function-of-r"
    UNCONSTRAINED = "unconstrained"


@dataclass(frozen=True)
class EinsteinTypeParams:
    beta: float
    mu: float
    rho: float = 0.0
    alpha: float = 0.0
    lambda_mode: LambdaMode = LambdaMode.UNCONSTRAINED

    def __post_init__(self):
        if self.alpha != 0:
            raise InvalidParametersError("only alpha = 0 is supported")
        if self.beta == 0 and self.mu == 0:
            raise InvalidParametersError("(alpha, beta, mu) = (0, 0, 0) is not an Einstein-type structure")


@dataclass(frozen=True)
class ReducedParams:
    c: float
    beta: float
    phi_scaled_by_beta: bool = True


def reduce(p: EinsteinTypeParams) -> ReducedParams:
    if p.beta == 0:
        raise BetaZeroError("beta = 0 cannot be reduced; use triviality_check_beta_zero")
    return ReducedParams(c=-p.mu / p.beta + 0.0, beta=p.beta)


def _c_of(c) -> float:
    return float(c.c) if isinstance(c, ReducedParams) else float(c)


# phi and its radial derivatives, from the potential alone --------------------

def phi(F: RadialField, c, r) -> float:
    """phi = F'' - c F'^2."""
    c = _c_of(c)
    return F(r, 2) - c * F(r, 1) ** 2


def _phi_jet(F: RadialField, c: float, r, order: int, fallback: bool = False):
    F1, F2 = F(r, 1), F(r, 2)
    out = [F2 - c * F1 * F1]
    if order >= 1:
        F3 = F(r, 3)
        out.append(F3 - 2 * c * F1 * F2)
    if order >= 2:
        out.append(_fourth(F, r, fallback) - 2 * c * F2 * F2 - 2 * c * F1 * F3)
    return out


def _fourth(F: RadialField, r, fallback: bool) -> float:
    if F.levels > 4:
        return F(r, 4)
    if not fallback:
        raise InsufficientSmoothnessError(
            f"potential {F.tag!r} has no fourth derivative; pass fallback=True to difference F'''")
    lo, hi = F.interval
    h = min(1e-3, (hi - lo) / 16)
    f = lambda s: F(s, 3)
    if r - 2 * h >= lo and r + 2 * h <= hi:
        return (f(r - 2 * h) - 8 * f(r - h) + 8 * f(r + h) - f(r + 2 * h)) / (12 * h)
    s = 1.0 if r - 2 * h < lo else -1.0
    v = [f(r + s * j * h) for j in range(5)]
    return s * (-25 * v[0] + 48 * v[1] - 36 * v[2] + 16 * v[3] - 3 * v[4]) / (12 * h)


def psi_from_potential(F: RadialField, c, r) -> float:
    """psi = F' exp(-c F)."""
    c = _c_of(c)
    return F(r, 1) * math.exp(-c * F(r))


def _same_interval(W: WarpedMetric, F: RadialField):
    a, b = W.interval, F.interval
    scale = max(1.0, *map(abs, a + b))
    if abs(a[0] - b[0]) > 1e-12 * scale or abs(a[1] - b[1]) > 1e-12 * scale:
        raise IntervalMismatchError(f"metric interval {a} differs from potential interval {b}")


# residuals -------------------------------------------------------------------

def einstein_type_residual(W: WarpedMetric, F: RadialField, rp, r, phi_source: str = "radial"):
    """(radial, fiber) components of Hess F - phi g - c dF dF.

    ``phi_source`` chooses which component defines phi: "radial" uses
    F'' - c F'^2 (so the radial residual vanishes by construction), "fiber"
    uses F' psi'/psi.
    """
    _same_interval(W, F)
    c = _c_of(rp)
    psi, d1, _ = W.warping.jet(r)
    F1, F2 = F(r, 1), F(r, 2)
    fiber_hess = F1 * d1 / psi
    if phi_source == "radial":
        ph = F2 - c * F1 * F1
    elif phi_source == "fiber":
        ph = fiber_hess
    else:
        raise ValueError(f"phi_source must be 'radial' or 'fiber', got {phi_source!r}")
    return F2 - ph - c * F1 * F1, fiber_hess - ph


def key1_residual(W: WarpedMetric, F: RadialField, c, r) -> float:
    """Radial component of (n-1) grad phi - (n-1) c phi grad F + Ric(grad F)."""
    c = _c_of(c)
    n = W.dimension
    ph, dph = _phi_jet(F, c, r, 1)
    F1 = F(r, 1)
    return (n - 1) * dph - (n - 1) * c * ph * F1 + ricci_radial(W, r) * F1


def key2_residual_components(W: WarpedMetric, F: RadialField, c, r, fallback: bool = False):
    """(rr, fiber-diagonal) components of the differentiated identity.

    Mixed components vanish identically for radial data.  The fiber entry is
    taken on a unit fiber vector e, using (nabla_e Ric)(e, d_r) =
    (psi'/psi)(Ric_rr - Ric_ee).
    """
    c = _c_of(c)
    n = W.dimension
    if not W.warping.has_third_derivative and not fallback:
        raise InsufficientSmoothnessError("warping profile has no psi'''; pass fallback=True")
    ph, dph, ddph = _phi_jet(F, c, r, 2, fallback)
    F1 = F(r, 1)
    psi, d1, _ = W.warping.jet(r)
    rr, ee = ricci_radial(W, r), ricci_fiber(W, r)
    drr = ricci_radial_derivative(W, r)
    m = n - 1
    radial = (m * ddph - m * c * dph * F1 - m * c * ph * ph - m * c * c * ph * F1 * F1
              + drr * F1 + ph * rr + c * rr * F1 * F1)
    fiber = m * dph * d1 / psi - m * c * ph * ph + d1 / psi * (rr - ee) * F1 + ph * ee
    return radial, fiber


def key3_residual(W: WarpedMetric, F: RadialField, c, r, fallback: bool = False) -> float:
    """Trace of the differentiated identity, with (1/2) <grad R, grad F> in place of div Ric."""
    c = _c_of(c)
    n = W.dimension
    if not W.warping.has_third_derivative and not fallback:
        raise InsufficientSmoothnessError("warping profile has no psi'''; pass fallback=True")
    ph, dph, ddph = _phi_jet(F, c, r, 2, fallback)
    F1 = F(r, 1)
    psi, d1, _ = W.warping.jet(r)
    R, dR = scalar_and_derivative(W, r)
    m = n - 1
    lap_phi = ddph + m * d1 / psi * dph
    return (m * lap_phi - m * c * dph * F1 - m * n * c * ph * ph - m * c * c * ph * F1 * F1
            + 0.5 * dR * F1 + ph * R + c * ricci_radial(W, r) * F1 * F1)


def key4_residual(F: RadialField, c, r) -> float:
    """phi' - c phi F'; equals exp(cF) psi'' for psi = F' exp(-cF)."""
    c = _c_of(c)
    ph, dph = _phi_jet(F, c, r, 1)
    return dph - c * ph * F(r, 1)


def lambda_recovery(rp: ReducedParams, rho: float, W: WarpedMetric, F: RadialField, r) -> float:
    """lambda = beta phi - rho R, undoing the division by beta."""
    if rp.beta == 0:
        raise BetaZeroError("lambda recovery needs beta != 0")
    R, _ = scalar_and_derivative(W, r)
    return rp.beta * phi(F, rp.c, r) - rho * R


# beta = 0 ------------------------------------------------------------------

class TrivialityVerdict(str, Enum):
    FORCED_TRIVIAL = "forced-trivial"
    UNDETERMINED = "undetermined"


class TrivialityCheck(NamedTuple):
    verdict: TrivialityVerdict
    residual: float
    consistent: bool


def triviality_check_beta_zero(m: int, F: RadialField, grid: Optional[Sequence[float]] = None,
                               atol: float = 1e-12) -> TrivialityCheck:
    """Check dF (x) dF = phi g in real dimension 2m.

    Tracing gives F'^2 = 2m phi while the radial component gives F'^2 = phi,
    so (2m - 1) F'^2 must vanish.  ``residual`` is (2m - 1) sup F'^2 over the
    grid; ``consistent`` says whether the given F could solve the equation.
    """
    if m < 1:
        raise DimensionError("m must be >= 1")
    if grid is None:
        grid = np.linspace(*F.interval, 201)
    sup = max(F(r, 1) ** 2 for r in grid)
    residual = (2 * m - 1) * sup
    verdict = TrivialityVerdict.FORCED_TRIVIAL if m > 1 else TrivialityVerdict.UNDETERMINED
    return TrivialityCheck(verdict, residual, residual <= atol)


# sigma_k ---------------------------------------------------------------------

def elementary_symmetric(values: Sequence[float], k: int) -> float:
    e = [1.0] + [0.0] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] += v * e[j - 1]
    return e[k]


def schouten_tensor(ricci, scalar: float, metric, n: int) -> np.ndarray:
    if n < 3:
        raise DimensionError("the Schouten tensor needs n >= 3")
    return (np.asarray(ricci) - scalar / (2 * (n - 1)) * np.asarray(metric)) / (n - 2)


def schouten_sigma_k(curv: CurvaturePack, metric, n: int, k: int) -> float:
    """k-th elementary symmetric function of the Schouten eigenvalues relative to g."""
    if n < 3:
        raise DimensionError("sigma_k curvature needs n >= 3")
    if not 1 <= k <= n:
        raise DimensionError(f"k must lie in [1, {n}], got {k}")
    metric = np.asarray(metric, dtype=float)
    if curv.ricci.shape != (n, n) or metric.shape != (n, n):
        raise DimensionError(f"curvature and metric must be {n}x{n}")
    A = schouten_tensor(curv.ricci, curv.scalar, metric, n)
    eig = eigh(0.5 * (A + A.T), metric, eigvals_only=True)
    return elementary_symmetric(eig, k)


def warped_sigma_k(W: WarpedMetric, r, k: int) -> float:
    """sigma_k from the closed-form Ricci eigenvalues of a warped product."""
    n = W.dimension
    if n < 3:
        raise DimensionError("sigma_k curvature needs n >= 3")
    rr, ee = ricci_radial(W, r), ricci_fiber(W, r)
    R = rr + (n - 1) * ee
    shift = R / (2 * (n - 1))
    eig = [(rr - shift) / (n - 2)] + [(ee - shift) / (n - 2)] * (n - 1)
    return elementary_symmetric(eig, k)


# reports ---------------------------------------------------------------------

@dataclass
class ResidualReport:
    identity: str
    grid: list
    residuals: list
    tolerance: float
    max_abs: float
    rms: float
    passed: bool
    flags: dict = field(default_factory=dict)

    @classmethod
    def from_samples(cls, identity, grid, residuals, tolerance, flags=None):
        res = np.asarray(residuals, dtype=float)
        max_abs = float(np.max(np.abs(res))) if res.size else 0.0
        rms = float(np.sqrt(np.mean(res ** 2))) if res.size else 0.0
        ok = bool(np.all(np.isfinite(res))) and max_abs <= tolerance
        flags = dict(flags or {})
        flags.setdefault("phi_scaled_by_beta", True)
        return cls(identity, [float(r) for r in grid], res.tolist(), float(tolerance),
                   max_abs, rms, ok, flags)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "grid": self.grid,
            "residuals": self.residuals,
            "max_abs": self.max_abs,
            "rms": self.rms,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "flags": dict(sorted(self.flags.items())),
        }


def identity_reports(W: WarpedMetric, F: RadialField, c, grid: Sequence[float], *,
                     tol_algebraic: float = 1e-10, tol_identity: Optional[float] = None,
                     tol_key4: Optional[float] = None, fallback: bool = False, flags=None):
    """Evaluate every identity over a grid and wrap each in a ResidualReport.

    ``tol_identity`` applies to key1-key3 (defaults to ``tol_algebraic``);
    ``tol_key4`` defaults to ``tol_identity``.
    """
    c = _c_of(c)
    tol_identity = tol_algebraic if tol_identity is None else tol_identity
    tol_key4 = tol_identity if tol_key4 is None else tol_key4
    grid = [float(r) for r in grid]
    flags = dict(flags or {})
    flags.setdefault("psi_third_derivative", "analytic" if W.warping.has_third_derivative else "differenced")
    et = [einstein_type_residual(W, F, c, r) for r in grid]
    k2 = [key2_residual_components(W, F, c, r, fallback) for r in grid]
    rows = [
        ("einstein_type_radial", [e[0] for e in et], tol_algebraic),
        ("einstein_type_fiber", [e[1] for e in et], tol_algebraic),
        ("key1", [key1_residual(W, F, c, r) for r in grid], tol_identity),
        ("key2_rr", [k[0] for k in k2], tol_identity),
        ("key2_fiber", [k[1] for k in k2], tol_identity),
        ("key3", [key3_residual(W, F, c, r, fallback) for r in grid], tol_identity),
        ("key4", [key4_residual(F, c, r) for r in grid], tol_key4),
    ]
    return [ResidualReport.from_samples(name, grid, vals, tol, flags) for name, vals, tol in rows]
