"""Soliton notions as gradient Einstein-type structures with alpha = 0."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParametersError


@dataclass(frozen=True)
class SolitonTypeEntry:
    name: str
    alpha: float
    beta: Optional[float]
    mu: Optional[float]
    rho: float
    lambda_semantics: str
    expression: str = ""

    @property
    def parameters(self) -> tuple:
        return (self.alpha, self.beta, self.mu, self.rho)

    def to_record(self) -> dict:
        return {"name": self.name, "alpha": self.alpha, "beta": self.beta, "mu": self.mu,
                "rho": self.rho, "lambda": self.lambda_semantics, "expression": self.expression}


YAMABE = "gradient Yamabe soliton"
ALMOST_YAMABE = "gradient almost Yamabe soliton"
K_YAMABE = "gradient k-Yamabe soliton"
CONFORMAL = "gradient conformal soliton"
QUASI_YAMABE = "gradient quasi-Yamabe soliton"

NAMES = (YAMABE, ALMOST_YAMABE, K_YAMABE, CONFORMAL, QUASI_YAMABE)


def soliton_type_table(n: Optional[int] = None, k: Optional[float] = None) -> list:
    """All entries; beta of k-Yamabe needs ``n`` and mu of quasi-Yamabe needs ``k``.

    Slots whose symbol is not supplied are left as None, with the symbolic
    form in ``expression``.
    """
    if n is not None and n < 2:
        raise InvalidParametersError("dimension must be >= 2")
    if k is not None and k == 0:
        raise InvalidParametersError("quasi-Yamabe k must be nonzero")
    return [
        SolitonTypeEntry(YAMABE, 0.0, 1.0, 0.0, 1.0, "constant"),
        SolitonTypeEntry(ALMOST_YAMABE, 0.0, 1.0, 0.0, 1.0, "unconstrained"),
        SolitonTypeEntry(K_YAMABE, 0.0, None if n is None else 1.0 / (2 * (n - 1)), 0.0, 0.0,
                         "sigma_k - nu", "beta = 1/(2(n-1)), lambda = sigma_k - nu with nu constant"),
        SolitonTypeEntry(CONFORMAL, 0.0, 1.0, 0.0, 0.0, "unconstrained"),
        SolitonTypeEntry(QUASI_YAMABE, 0.0, 1.0, None if k is None else -1.0 / k, 1.0, "constant",
                         "mu = -1/k, k real and nonzero"),
    ]


def lookup(name: str, n: Optional[int] = None, k: Optional[float] = None) -> SolitonTypeEntry:
    key = name.strip().lower()
    if key == K_YAMABE.lower() and n is None:
        raise InvalidParametersError("the k-Yamabe entry needs the dimension n")
    if key == QUASI_YAMABE.lower() and k is None:
        raise InvalidParametersError("the quasi-Yamabe entry needs k")
    for entry in soliton_type_table(n, k):
        if entry.name.lower() == key:
            return entry
    raise KeyError(f"unknown soliton type {name!r}; known: {', '.join(NAMES)}")
