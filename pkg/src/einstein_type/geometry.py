"""Finite-difference tensor calculus on coordinate patches.

Everything here is computed from a metric given as a plain function of the
chart coordinates.  Derivatives are taken with central tensor-product
stencils; no symbolic algebra is involved.  The results serve as an
independent numerical check on the closed-form warped-product formulas.

Index conventions (all arrays are numpy, coordinate indices start at 0):

* ``dg[k, i, j]``          = d_k g_ij
* ``ddg[k, l, i, j]``      = d_k d_l g_ij
* ``gamma[k, i, j]``       = Gamma^k_ij
* ``riemann[i, j, k, l]``  = g(R(d_i, d_j) d_k, d_l) with
  R(X, Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
* ``ricci[j, k]``          = trace of X -> R(X, d_j) d_k (positive on spheres)
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DegenerateMetricError, OutOfDomainError

# 1D central stencils: order -> derivative -> (offsets, weights); weights are
# divided by h**derivative at the point of use.
_STENCILS = {
    2: {
        1: ((-1, 1), (-0.5, 0.5)),
        2: ((-1, 0, 1), (1.0, -2.0, 1.0)),
        3: ((-2, -1, 1, 2), (-0.5, 1.0, -1.0, 0.5)),
    },
    4: {
        1: ((-2, -1, 1, 2), (1 / 12, -8 / 12, 8 / 12, -1 / 12)),
        2: ((-2, -1, 0, 1, 2), (-1 / 12, 16 / 12, -30 / 12, 16 / 12, -1 / 12)),
        3: ((-3, -2, -1, 1, 2, 3), (1 / 8, -1.0, 13 / 8, -13 / 8, 1.0, -1 / 8)),
    },
}

# Farthest stencil node (in units of h) for derivatives up to a given level.
_REACH = {2: {1: 1, 2: 1, 3: 2}, 4: {1: 2, 2: 2, 3: 3}}


@dataclass(frozen=True)
class StencilConfig:
    """Finite-difference settings.

    ``richardson`` combines the results at ``h`` and ``h/2`` to cancel the
    leading error term.
    """

    h: float = 1e-2
    order: int = 4
    tolerance: float = 1e-4
    richardson: bool = False

    def __post_init__(self):
        if self.h <= 0:
            raise ValueError("stencil step must be positive")
        if self.order not in _STENCILS:
            raise ValueError(f"stencil order must be 2 or 4, got {self.order}")
        if self.tolerance <= 0:
            raise ValueError("tolerance scale must be positive")

    def halved(self) -> "StencilConfig":
        return StencilConfig(self.h / 2, self.order, self.tolerance, self.richardson)


@dataclass(frozen=True)
class CoordinatePatch:
    """A chart: metric components as a function of a point in a box."""

    metric: Callable[[np.ndarray], np.ndarray]
    box: tuple
    margin: float = 0.05

    def __post_init__(self):
        box = tuple((float(lo), float(hi)) for lo, hi in self.box)
        object.__setattr__(self, "box", box)
        if len(box) < 2:
            raise ValueError("a coordinate patch needs dimension >= 2")
        if any(hi <= lo for lo, hi in box):
            raise ValueError(f"empty domain box {box}")
        if self.margin <= 0:
            raise ValueError("regularity margin must be positive")

    @property
    def dimension(self) -> int:
        return len(self.box)

    def distance_to_boundary(self, point) -> float:
        p = np.asarray(point, dtype=float)
        lo = np.array([b[0] for b in self.box])
        hi = np.array([b[1] for b in self.box])
        return float(np.min(np.minimum(p - lo, hi - p)))


@dataclass(frozen=True)
class ScalarField:
    """A function on a patch, optionally with analytic coordinate partials.

    ``gradient`` returns the vector of first partials, ``hessian`` the matrix
    of second partials (plain coordinate derivatives, not covariant).
    """

    value: Callable[[np.ndarray], float]
    gradient: Optional[Callable[[np.ndarray], np.ndarray]] = None
    hessian: Optional[Callable[[np.ndarray], np.ndarray]] = None


@dataclass(frozen=True)
class ConnectionCoefficients:
    gamma: np.ndarray
    metric: np.ndarray
    inverse: np.ndarray

    def __getitem__(self, idx):
        return self.gamma[idx]


@dataclass(frozen=True)
class CurvaturePack:
    riemann: np.ndarray
    ricci: np.ndarray
    scalar: float
    metric: np.ndarray = field(repr=False)
    inverse: np.ndarray = field(repr=False)

    def symmetry_defect(self) -> float:
        """Largest violation of the algebraic Riemann and Ricci symmetries."""
        rm = self.riemann
        return float(max(
            np.max(np.abs(rm + rm.transpose(1, 0, 2, 3))),
            np.max(np.abs(rm + rm.transpose(0, 1, 3, 2))),
            np.max(np.abs(rm - rm.transpose(2, 3, 0, 1))),
            np.max(np.abs(self.ricci - self.ricci.T)),
        ))

    def trace_defect(self) -> float:
        return abs(self.scalar - float(np.einsum("ij,ij", self.inverse, self.ricci)))


class _NodeCache:
    """Evaluates a function at ``x + h * offset`` for integer offsets, once per node."""

    def __init__(self, func, x, h, check=None):
        self.func = func
        self.x = x
        self.h = h
        self.check = check
        self._values = {}

    def __call__(self, offset):
        key = tuple(offset)
        if key not in self._values:
            node = self.x + self.h * np.asarray(key, dtype=float)
            val = np.asarray(self.func(node), dtype=float)
            if self.check is not None:
                self.check(val, node)
            self._values[key] = val
        return self._values[key]


def _raw_partial(nodes: _NodeCache, counts: Sequence[int], order: int):
    n = len(counts)
    axes = [(ax, d) for ax, d in enumerate(counts) if d]
    per_axis = []
    for ax, d in axes:
        offs, wts = _STENCILS[order][d]
        per_axis.append([(ax, o, w) for o, w in zip(offs, wts) if w != 0.0])
    total = 0.0
    for combo in itertools.product(*per_axis):
        offset = [0] * n
        weight = 1.0
        for ax, o, w in combo:
            offset[ax] = o
            weight *= w
        total = total + weight * nodes(offset)
    return total / nodes.h ** sum(counts)


class _Differentiator:
    """Partial derivatives of one function at one point, with optional Richardson."""

    def __init__(self, func, x, stencil: StencilConfig, check=None):
        self.stencil = stencil
        self.fine = None
        self.coarse = _NodeCache(func, x, stencil.h, check)
        if stencil.richardson:
            self.fine = _NodeCache(func, x, stencil.h / 2, check)

    def value(self):
        return self.coarse([0] * len(self.coarse.x))

    def partial(self, counts):
        order = self.stencil.order
        a = _raw_partial(self.coarse, counts, order)
        if self.fine is None:
            return a
        b = _raw_partial(self.fine, counts, order)
        f = 2.0 ** order
        return (f * b - a) / (f - 1.0)


def _unit(n, *axes):
    counts = [0] * n
    for ax in axes:
        counts[ax] += 1
    return counts


def _check_metric(g, node):
    if not np.all(np.isfinite(g)):
        raise DegenerateMetricError(f"non-finite metric at {node}")
    scale = max(1.0, float(np.max(np.abs(g))))
    if np.max(np.abs(g - g.T)) > 1e-12 * scale:
        raise DegenerateMetricError(f"metric not symmetric at {node}")
    try:
        np.linalg.cholesky(g)
    except np.linalg.LinAlgError:
        raise DegenerateMetricError(f"metric not positive definite at {node}") from None


def _require_inside(patch: CoordinatePatch, point, stencil: StencilConfig, level: int):
    x = np.asarray(point, dtype=float)
    if x.shape != (patch.dimension,):
        raise OutOfDomainError(f"point has shape {x.shape}, patch dimension is {patch.dimension}")
    if stencil.h >= patch.margin:
        raise OutOfDomainError(
            f"stencil step {stencil.h} is not smaller than the regularity margin {patch.margin}")
    need = max(patch.margin, _REACH[stencil.order][level] * stencil.h)
    dist = patch.distance_to_boundary(x)
    if dist < need:
        raise OutOfDomainError(
            f"point {x} is {dist:.3g} from the boundary; at least {need:.3g} required")
    return x


def _metric_jet(patch, x, stencil, second=True):
    n = patch.dimension
    d = _Differentiator(patch.metric, x, stencil, _check_metric)
    g = d.value()
    dg = np.array([d.partial(_unit(n, k)) for k in range(n)])
    if not second:
        return g, dg, None
    ddg = np.empty((n, n, n, n))
    for k in range(n):
        for l in range(k, n):
            ddg[k, l] = ddg[l, k] = d.partial(_unit(n, k, l))
    return g, dg, ddg


def _field_jet(patch, fld: ScalarField, x, stencil, third=False):
    """First, second (and optionally third) coordinate partials of a field."""
    n = patch.dimension
    d = _Differentiator(fld.value, x, stencil)
    if fld.gradient is not None:
        grad = np.asarray(fld.gradient(x), dtype=float)
    else:
        grad = np.array([d.partial(_unit(n, i)) for i in range(n)])
    if fld.hessian is not None:
        hess = np.asarray(fld.hessian(x), dtype=float)
    else:
        hess = np.empty((n, n))
        for i in range(n):
            for j in range(i, n):
                hess[i, j] = hess[j, i] = d.partial(_unit(n, i, j))
    if not third:
        return grad, hess, None
    t = np.empty((n, n, n))
    if fld.hessian is not None:
        dh = _Differentiator(fld.hessian, x, stencil)
        for k in range(n):
            t[k] = dh.partial(_unit(n, k))
        t = (t + t.transpose(1, 0, 2) + t.transpose(2, 1, 0)) / 3.0
        return grad, hess, t
    for i, j, k in itertools.combinations_with_replacement(range(n), 3):
        v = d.partial(_unit(n, i, j, k))
        for p in set(itertools.permutations((i, j, k))):
            t[p] = v
    return grad, hess, t


def _connection_from_jet(g, dg, ddg=None):
    ginv = np.linalg.inv(g)
    # s[l, i, j] = d_i g_lj + d_j g_li - d_l g_ij
    s = dg.transpose(1, 0, 2) + dg.transpose(1, 2, 0) - dg
    gamma = 0.5 * np.einsum("kl,lij->kij", ginv, s)
    if ddg is None:
        return ginv, gamma, None
    dginv = -np.einsum("ka,mab,bl->mkl", ginv, dg, ginv)
    # ds[m, l, i, j] = d_m s[l, i, j]
    ds = ddg.transpose(0, 2, 1, 3) + ddg.transpose(0, 2, 3, 1) - ddg
    dgamma = 0.5 * (np.einsum("mkl,lij->mkij", dginv, s) + np.einsum("kl,mlij->mkij", ginv, ds))
    return ginv, gamma, dgamma


def _curvature_from_connection(g, ginv, gamma, dgamma):
    # rup[l, i, j, k]: component l of R(d_i, d_j) d_k
    rup = (dgamma.transpose(1, 0, 2, 3) - dgamma.transpose(1, 2, 0, 3)
           + np.einsum("lim,mjk->lijk", gamma, gamma)
           - np.einsum("ljm,mik->lijk", gamma, gamma))
    riemann = np.einsum("lm,mijk->ijkl", g, rup)
    ricci = np.einsum("iijk->jk", rup)
    scalar = float(np.einsum("jk,jk", ginv, ricci))
    return riemann, ricci, scalar


def christoffel(patch: CoordinatePatch, point, stencil: StencilConfig = StencilConfig()) -> ConnectionCoefficients:
    """Levi-Civita connection coefficients at ``point``."""
    x = _require_inside(patch, point, stencil, 1)
    g, dg, _ = _metric_jet(patch, x, stencil, second=False)
    ginv, gamma, _ = _connection_from_jet(g, dg)
    return ConnectionCoefficients(gamma=gamma, metric=g, inverse=ginv)


def metric_compatibility_residual(patch: CoordinatePatch, point, stencil: StencilConfig = StencilConfig()) -> float:
    """Max |nabla_k g_ij| with the metric re-differentiated at half the step."""
    conn = christoffel(patch, point, stencil)
    x = np.asarray(point, dtype=float)
    _, dg, _ = _metric_jet(patch, x, stencil.halved(), second=False)
    g = conn.metric
    cov = (dg - np.einsum("mki,mj->kij", conn.gamma, g) - np.einsum("mkj,im->kij", conn.gamma, g))
    return float(np.max(np.abs(cov)))


def curvature(patch: CoordinatePatch, point, stencil: StencilConfig = StencilConfig()) -> CurvaturePack:
    """Riemann, Ricci and scalar curvature at ``point``."""
    x = _require_inside(patch, point, stencil, 2)
    g, dg, ddg = _metric_jet(patch, x, stencil)
    ginv, gamma, dgamma = _connection_from_jet(g, dg, ddg)
    riemann, ricci, scalar = _curvature_from_connection(g, ginv, gamma, dgamma)
    return CurvaturePack(riemann=riemann, ricci=ricci, scalar=scalar, metric=g, inverse=ginv)


def hessian(patch: CoordinatePatch, fld: ScalarField, point, stencil: StencilConfig = StencilConfig()) -> np.ndarray:
    """Covariant Hessian: second partials minus the Christoffel contraction."""
    x = _require_inside(patch, point, stencil, 2)
    conn = christoffel(patch, x, stencil)
    grad, hess, _ = _field_jet(patch, fld, x, stencil)
    h = hess - np.einsum("kij,k->ij", conn.gamma, grad)
    return 0.5 * (h + h.T)


def gradient_data(patch: CoordinatePatch, fld: ScalarField, point, stencil: StencilConfig = StencilConfig()):
    """Return ``(grad F, |grad F|^2, Laplacian F)``; grad F is contravariant."""
    x = _require_inside(patch, point, stencil, 2)
    conn = christoffel(patch, x, stencil)
    dF, hess, _ = _field_jet(patch, fld, x, stencil)
    grad = conn.inverse @ dF
    h = hess - np.einsum("kij,k->ij", conn.gamma, dF)
    lap = float(np.einsum("ij,ij", conn.inverse, h))
    return grad, float(dF @ grad), lap


def ricci_identity_residual(patch: CoordinatePatch, fld: ScalarField, point,
                            stencil: StencilConfig = StencilConfig()) -> np.ndarray:
    """Components of  Lap(dF)_i - d_i(Lap F) - Ric_ij grad^j F.

    The commutation identity makes this vanish for every smooth metric and
    field, so whatever is left is stencil error.
    """
    x = _require_inside(patch, point, stencil, 3)
    g, dg, ddg = _metric_jet(patch, x, stencil)
    ginv, gamma, dgamma = _connection_from_jet(g, dg, ddg)
    _, ricci, _ = _curvature_from_connection(g, ginv, gamma, dgamma)
    dF, d2F, d3F = _field_jet(patch, fld, x, stencil, third=True)

    hess = d2F - np.einsum("kij,k->ij", gamma, dF)
    # dh[j, k, i] = d_j H_ki
    dh = d3F - np.einsum("jmki,m->jki", dgamma, dF) - np.einsum("mki,jm->jki", gamma, d2F)
    cov_dh = dh - np.einsum("mjk,mi->jki", gamma, hess) - np.einsum("mji,km->jki", gamma, hess)
    lap_grad = np.einsum("jk,jki->i", ginv, cov_dh)

    dginv = -np.einsum("ka,mab,bl->mkl", ginv, dg, ginv)
    grad_lap = np.einsum("ijk,jk->i", dginv, hess) + np.einsum("jk,ijk->i", ginv, dh)
    return lap_grad - grad_lap - ricci @ (ginv @ dF)
