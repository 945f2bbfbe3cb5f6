import math

import numpy as np
import pytest

from einstein_type.geometry import CoordinatePatch, ScalarField

ACCEPTANCE_LINES = []


def record_criterion(number, description, passed, detail=""):
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {description}"
    if detail:
        line += f"  ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_smooth_patch(rng, n, amplitude=0.1):
    """Flat metric plus a smooth symmetric bump/sinusoid perturbation, uniformly positive definite."""
    center = rng.uniform(-0.5, 0.5, n)
    width = rng.uniform(0.6, 1.2)
    mats = []
    for _ in range(2):
        m = rng.normal(size=(n, n))
        m = (m + m.T) / 2
        mats.append(m / np.linalg.norm(m, 2))
    freq = rng.uniform(0.5, 2.0, n)
    phase = rng.uniform(0, 2 * math.pi)

    def metric(x):
        bump = math.exp(-np.sum((x - center) ** 2) / width ** 2)
        wave = math.sin(freq @ x + phase)
        return np.eye(n) + amplitude * (bump * mats[0] + 0.5 * wave * mats[1])

    return CoordinatePatch(metric, [(-1.0, 1.0)] * n, margin=0.1)


def random_cubic_field(rng, n):
    lin = rng.normal(size=n)
    quad = rng.normal(size=(n, n))
    quad = (quad + quad.T) / 2
    cub = rng.normal(size=(n, n, n)) / 3

    def value(x):
        return float(lin @ x + x @ quad @ x / 2 + np.einsum("ijk,i,j,k", cub, x, x, x) / 6)

    return ScalarField(value)


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


@pytest.fixture(scope="session")
def smooth_pairs():
    """60 random (patch, field, point) triples in dimensions 2-4."""
    rng = np.random.default_rng(7)
    out = []
    for i in range(60):
        n = 2 + i % 3
        out.append((random_smooth_patch(rng, n), random_cubic_field(rng, n), rng.uniform(-0.4, 0.4, n)))
    return out
