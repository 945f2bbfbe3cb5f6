"""The classified model solutions and the (beta, mu) sign classifier."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import InvalidParametersError, NoModelError, OutOfDomainError
from .warped import CLOSED_FORM, FiberSpec, RadialField, WarpedMetric, WarpingProfile

DEFAULT_INTERVAL = (1e-2, 10.0)


class CaseTag(str, Enum):
    I = "I-nonexistent"
    II_A = "II-A-cylinder"
    II_B = "II-B-euclidean"
    III = "III-nonexistent"
    IV = "IV-rotational"

    @property
    def constructive(self) -> bool:
        return self in (CaseTag.II_A, CaseTag.II_B, CaseTag.IV)


# II-B potential conventions: "quadratic" means F = a r^2 + b, "slope" means F' = a r.
II_B_CONVENTIONS = ("quadratic", "slope")


@dataclass(frozen=True)
class TheoremCase:
    tag: CaseTag
    a: float = 1.0
    b: float = 0.0
    c1: float = 0.0
    c: float = 0.0
    convention: str = "quadratic"

    def __post_init__(self):
        object.__setattr__(self, "tag", CaseTag(self.tag))
        if self.tag in (CaseTag.II_A, CaseTag.II_B, CaseTag.IV) and not self.a > 0:
            raise InvalidParametersError(f"case {self.tag.value} needs a > 0, got a={self.a}")
        if self.tag in (CaseTag.II_A, CaseTag.II_B) and self.c != 0:
            raise InvalidParametersError(f"case {self.tag.value} has c = 0, got c={self.c}")
        if self.tag is CaseTag.IV:
            if not self.c < 0:
                raise InvalidParametersError(f"case IV needs c < 0, got c={self.c}")
            if not self.c1 > 0:
                raise InvalidParametersError(f"case IV needs c1 > 0, got c1={self.c1}")
        if self.convention not in II_B_CONVENTIONS:
            raise InvalidParametersError(f"unknown II-B convention {self.convention!r}")

    def to_record(self) -> dict:
        return {"tag": self.tag.value, "a": self.a, "b": self.b, "c1": self.c1, "c": self.c,
                "convention": self.convention}


def _iv_jet(a, c, c1, r):
    # F = -(1/c) log D with D = A + B r^2, A = -c c1 > 0, B = -c a / 2 > 0
    A, B = -c * c1, -c * a / 2
    D = A + B * r * r
    if not D > 0:
        raise OutOfDomainError(f"log argument {D} is not positive at r={r}")
    return (
        -math.log(D) / c,
        a * r / D,
        a * (A - B * r * r) / D ** 2,
        -2 * a * B * r * (3 * A - B * r * r) / D ** 3,
        -6 * a * B * (A * A - 6 * A * B * r * r + B * B * r ** 4) / D ** 4,
    )


def _closed_form_jet(case: TheoremCase, r) -> tuple:
    a, b = case.a, case.b
    if case.tag is CaseTag.II_A:
        return (a * r + b, a, 0.0, 0.0, 0.0)
    if case.tag is CaseTag.II_B:
        q = a if case.convention == "quadratic" else a / 2
        return (q * r * r + b, 2 * q * r, 2 * q, 0.0, 0.0)
    if case.tag is CaseTag.IV:
        return _iv_jet(a, case.c, case.c1, r)
    raise NoModelError(f"case {case.tag.value} has no potential")


def closed_form_potential(case: TheoremCase, r) -> tuple:
    """(F, F', F'', F''') of the model potential at r."""
    return _closed_form_jet(case, float(r))[:4]


def case_potential(case: TheoremCase, interval=DEFAULT_INTERVAL) -> RadialField:
    """The model potential as a RadialField carrying five derivative levels."""
    if not case.tag.constructive:
        raise NoModelError(f"case {case.tag.value} has no potential")
    ders = tuple((lambda r, k=k: _closed_form_jet(case, r)[k]) for k in range(5))
    return RadialField(ders, interval, CLOSED_FORM, case.tag.value, case.to_record())


def classify(beta: float, mu: float) -> frozenset:
    """Which outcomes of the classification the sign pattern allows."""
    if beta == 0 and mu == 0:
        raise InvalidParametersError("(alpha, beta, mu) = (0, 0, 0) is excluded")
    if beta == 0:
        return frozenset({CaseTag.I})
    if mu == 0:
        # the two subcases differ by the critical points of F, which (beta, mu) cannot tell
        return frozenset({CaseTag.II_A, CaseTag.II_B})
    if (beta > 0) != (mu > 0):
        return frozenset({CaseTag.III})
    return frozenset({CaseTag.IV})


class Model(NamedTuple):
    metric: WarpedMetric
    potential: RadialField


def build_model(case: TheoremCase, n: int = 4, interval=DEFAULT_INTERVAL, fiber: str = "sphere") -> Model:
    """Warped metric with psi = F' exp(-cF) built from the case's potential."""
    if not case.tag.constructive:
        raise NoModelError(f"case {case.tag.value}: there exists no non-trivial Einstein-type manifold")
    if n < 2:
        raise InvalidParametersError("dimension must be >= 2")
    if fiber == "flat" and case.tag is not CaseTag.II_A:
        raise InvalidParametersError("only the cylinder case admits a flat fiber here")
    spec = FiberSpec.flat(n - 1) if fiber == "flat" else FiberSpec.sphere(n - 1)
    F = case_potential(case, interval)
    psi = WarpingProfile.from_potential(F, case.c)
    return Model(WarpedMetric(psi, spec), F)


def model_flags(case: TheoremCase) -> dict:
    """Report flags: the cone slope psi'(0) at the tip, when there is a tip.

    A slope different from 1 means a cone angle at r = 0; it is recorded,
    not judged.
    """
    if case.tag is CaseTag.IV:
        slope = case.a
    elif case.tag is CaseTag.II_B:
        slope = 2 * case.a if case.convention == "quadratic" else case.a
    else:
        return {}
    return {"tip_slope": slope, "tip_cone_angle": slope != 1.0}


def linear_warping_potential(c: float, initial, r0: float, interval) -> RadialField:
    """Potential whose warping psi = F' exp(-cF) is affine in r.

    Every solution of F''' - 3cF'F'' + c^2 F'^3 = 0 has psi'' = 0, so the
    initial data (F, F', F'') at r0 fix psi(r) = psi0 + psi1 (r - r0) and
    exp(-cF) = exp(-cF0) - c (psi0 s + psi1 s^2 / 2), s = r - r0.
    """
    c = float(c)
    F0, G0, H0 = (float(v) for v in initial)
    e0 = math.exp(-c * F0)
    psi0 = G0 * e0
    psi1 = (H0 - c * G0 * G0) * e0

    def parts(r):
        s = r - r0
        psi = psi0 + psi1 * s
        E = e0 - c * (psi0 * s + 0.5 * psi1 * s * s)
        if not E > 0:
            raise OutOfDomainError(f"exp(-cF) would be {E} at r={r}")
        return s, psi, E

    def value(r):
        s, _, _ = parts(r)
        q = psi0 * s + 0.5 * psi1 * s * s
        if c == 0:
            return F0 + q
        # -log(E)/c rewritten so small |c| does not cancel
        return F0 - math.log1p(-c * q / e0) / c

    def jet(r):
        # u = F' = psi/E, p = psi'/E; u' = p + c u^2, p' = c u p
        _, psi, E = parts(r)
        u, p = psi / E, psi1 / E
        dp = c * u * p
        du = p + c * u * u
        ddp = c * (du * p + u * dp)
        ddu = dp + 2 * c * u * du
        dddu = ddp + 2 * c * (du * du + u * ddu)
        return u, du, ddu, dddu

    ders = (value,) + tuple((lambda r, k=k: jet(r)[k]) for k in range(4))
    F = RadialField(ders, interval, CLOSED_FORM, "linear-warping",
                    {"c": c, "initial": [F0, G0, H0], "r0": float(r0)})
    checks = list(F.interval)
    if psi1 != 0 and F.interval[0] < r0 - psi0 / psi1 < F.interval[1]:
        checks.append(r0 - psi0 / psi1)
    for r in checks:
        parts(r)
    return F
