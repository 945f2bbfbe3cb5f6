"""The third-order radial ODE  F''' - 3c F' F'' + c^2 F'^3 = 0."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.integrate import solve_ivp

from .errors import InvalidParametersError, StiffnessError
from .warped import SAMPLED, RadialField


def soliton_ode_rhs(state, c: float) -> float:
    """F''' as a function of (F, F', F'')."""
    _, F1, F2 = state
    return 3 * c * F1 * F2 - c * c * F1 ** 3


def _rhs_derivative(state, c: float) -> float:
    # d/dr of the right-hand side along solutions, i.e. F''''
    _, F1, F2 = state
    F3 = soliton_ode_rhs(state, c)
    return 3 * c * (F2 * F2 + F1 * F3) - 3 * c * c * F1 * F1 * F2


@dataclass(frozen=True)
class IntegrationResult:
    field: RadialField
    domain_exit: bool
    exit_r: Optional[float]
    nfev: int
    message: str


def integrate_soliton_ode(c: float, initial, interval, rtol: float = 1e-10, atol: float = 1e-12,
                          max_step: float = np.inf, method: str = "DOP853") -> IntegrationResult:
    """Integrate from interval[0] with (F, F', F'') = initial, halting if F' reaches 0.

    The returned field is dense: F, F', F'' come from the integrator's
    interpolant and F''', F'''' from the ODE itself.
    """
    r0, r1 = (float(v) for v in interval)
    y0 = np.array([float(v) for v in initial])
    if y0.shape != (3,):
        raise InvalidParametersError("initial state must be (F, F', F'')")
    if not y0[1] > 0:
        raise InvalidParametersError(f"F'(r0) must be positive, got {y0[1]}")
    if not r1 > r0:
        raise InvalidParametersError(f"empty interval [{r0}, {r1}]")
    c = float(c)

    def rhs(_, y):
        return (y[1], y[2], soliton_ode_rhs(y, c))

    def slope_vanishes(_, y):
        return y[1]
    slope_vanishes.terminal = True
    slope_vanishes.direction = -1

    sol = solve_ivp(rhs, (r0, r1), y0, method=method, rtol=rtol, atol=atol, max_step=max_step,
                    dense_output=True, events=slope_vanishes)
    if sol.status == -1:
        raise StiffnessError(f"integration failed near r={sol.t[-1]}: {sol.message}", last_r=float(sol.t[-1]))
    exit_r = None
    end = r1
    if sol.status == 1 and len(sol.t_events[0]):
        exit_r = float(sol.t_events[0][0])
        end = exit_r
    dense = sol.sol

    def level(k):
        if k < 3:
            return lambda r: float(dense(r)[k])
        if k == 3:
            return lambda r: soliton_ode_rhs(dense(r), c)
        return lambda r: _rhs_derivative(dense(r), c)

    F = RadialField(tuple(level(k) for k in range(5)), (r0, end), SAMPLED, "ode",
                    {"c": c, "initial": y0.tolist(), "rtol": rtol, "atol": atol})
    return IntegrationResult(F, exit_r is not None, exit_r, int(sol.nfev), sol.message)
