"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline;
they are also collected into an "acceptance criteria" terminal section.
"""
import json
import math
import subprocess
import sys

import numpy as np
import pytest
from scipy.special import comb

from conftest import random_cubic_field, random_smooth_patch, record_criterion
from einstein_type.cases import CaseTag, TheoremCase, build_model, case_potential, classify, closed_form_potential
from einstein_type.geometry import StencilConfig, curvature, ricci_identity_residual
from einstein_type.ode import integrate_soliton_ode
from einstein_type.soliton import (EinsteinTypeParams, TrivialityVerdict, einstein_type_residual,
                                   key1_residual, key2_residual_components, key3_residual, key4_residual,
                                   lambda_recovery, phi, reduce, schouten_sigma_k, triviality_check_beta_zero)
from einstein_type.suite import SUITE_C_VALUES, spline_suite
from einstein_type.table import CONFORMAL, YAMABE, lookup
from einstein_type.warped import (FiberSpec, RadialField, WarpedMetric, WarpingProfile, patch_point,
                                  ricci_fiber, ricci_radial, scalar_and_derivative, to_patch)

S3 = FiberSpec.sphere(3)


@pytest.fixture(scope="module")
def suite():
    pairs = spline_suite(60, seed=0)
    out = []
    for F, c in pairs:
        W = WarpedMetric(WarpingProfile.from_potential(F, c), S3)
        out.append((W, F, c, np.linspace(*F.interval, 41)))
    return out


def test_classifier_table():
    expected = {
        (0.0, 1.0): {CaseTag.I},
        (1.0, 0.0): {CaseTag.II_A, CaseTag.II_B},
        (1.0, 1.0): {CaseTag.IV},
        (1.0, -1.0): {CaseTag.III},
    }
    ok = True
    for (beta, mu), tags in expected.items():
        for scale in (0.25, 1.0, 7.0):
            b, m = beta * scale, mu * scale
            ok &= classify(b, m) == tags
            ok &= classify(-b, -m) == tags
    ok &= classify(-1.0, 1.0) == {CaseTag.III}
    record_criterion(1, "classifier reproduces the four sign patterns, sign-flip invariant", ok)
    assert ok


def test_ode_matches_closed_forms():
    case = TheoremCase(CaseTag.IV, a=1.0, c=-1.0, c1=1.0)
    grid = np.linspace(0.1, 10.0, 1000)
    res = integrate_soliton_ode(-1.0, closed_form_potential(case, 0.1)[:3], (0.1, 10.0))
    exact = case_potential(case)
    err_iv = max(abs(res.field(r) - exact(r)) for r in grid)
    lin = integrate_soliton_ode(0.0, (1.3 * 0.1 - 0.4, 1.3, 0.0), (0.1, 10.0))
    err_lin = max(abs(lin.field(r) - (1.3 * r - 0.4)) for r in grid)
    quad = integrate_soliton_ode(0.0, (0.7 * 0.01, 1.4 * 0.1, 1.4), (0.1, 10.0))
    err_quad = max(abs(quad.field(r) - 0.7 * r * r) for r in grid)
    ok = err_iv <= 1e-8 and err_lin <= 1e-10 and err_quad <= 1e-10 and not res.domain_exit
    record_criterion(2, "ODE integration matches closed-form potentials", ok,
                     f"rotational {err_iv:.1e}, linear {err_lin:.1e}, quadratic {err_quad:.1e}")
    assert ok


def test_solution_family_identities(suite):
    assert len(suite) >= 50 and {c for *_, c, _ in suite} == set(SUITE_C_VALUES)
    et = k1 = k3 = 0.0
    for W, F, c, grid in suite:
        for r in grid:
            et = max(et, *map(abs, einstein_type_residual(W, F, c, r)))
            k1 = max(k1, abs(key1_residual(W, F, c, r)))
            k3 = max(k3, abs(key3_residual(W, F, c, r)))
    k2 = 0.0
    for case in (TheoremCase(CaseTag.II_A, a=1.5, b=0.2), TheoremCase(CaseTag.II_B, a=0.8, b=-1.0),
                 TheoremCase(CaseTag.IV, a=1.0, c=-1.0, c1=1.0), TheoremCase(CaseTag.IV, a=2.0, c=-0.5, c1=3.0)):
        W, F = build_model(case)
        for r in np.linspace(0.1, 5.0, 50):
            k2 = max(k2, *map(abs, key2_residual_components(W, F, case.c, r)))
    ok = et <= 1e-10 and k1 <= 1e-6 and k3 <= 1e-6 and k2 <= 1e-9
    record_criterion(3, f"identity suite on {len(suite)} spline potentials and closed-form models", ok,
                     f"einstein-type {et:.1e}, key1 {k1:.1e}, key3 {k3:.1e}, key2 {k2:.1e}")
    assert ok


def test_key4_is_exp_times_psi_second_derivative(suite):
    worst = 0.0
    for W, F, c, grid in suite:
        for r in grid:
            worst = max(worst, abs(key4_residual(F, c, r) - math.exp(c * F(r)) * W.warping(r, 2)))
    ok = worst <= 1e-12
    record_criterion(4, "key4 residual equals exp(cF) psi'' across the random suite", ok, f"max {worst:.1e}")
    assert ok


def test_cross_oracle_curvature():
    profiles = [
        ("cylinder", WarpingProfile.constant(1.3), 6 / 1.3 ** 2),
        ("cone", WarpingProfile.linear(1.0), 0.0),
        ("sine", WarpingProfile.sine(interval=(0.05, 3.0)), 12.0),
    ]
    worst, worst_ratio = 0.0, math.inf
    for _, psi, R in profiles:
        W = WarpedMetric(psi, S3)
        patch = to_patch(W)
        for r in (0.7, 1.5, 2.4):
            errs = []
            for h in (1e-2, 5e-3):
                pack = curvature(patch, patch_point(W, r), StencilConfig(h=h))
                errs.append(max(abs(pack.scalar - R),
                                abs(pack.scalar - scalar_and_derivative(W, r)[0]),
                                abs(pack.ricci[0, 0] - ricci_radial(W, r)),
                                max(abs(pack.ricci[i, i] / pack.metric[i, i] - ricci_fiber(W, r)) for i in (1, 2, 3))))
            worst = max(worst, errs[0])
            worst_ratio = min(worst_ratio, errs[0] / errs[1])
    ok = worst <= 1e-4 and worst_ratio >= 3.5
    record_criterion(5, "finite-difference curvature of cylinder, cone and sphere matches closed forms", ok,
                     f"max error {worst:.1e}, min halving ratio {worst_ratio:.1f}")
    assert ok


def test_ricci_identity_self_test():
    rng = np.random.default_rng(2024)
    st = StencilConfig()
    worst = 0.0
    count = 60
    for i in range(count):
        n = 2 + i % 3
        patch, field = random_smooth_patch(rng, n), random_cubic_field(rng, n)
        worst = max(worst, float(np.max(np.abs(ricci_identity_residual(patch, field, rng.uniform(-0.4, 0.4, n), st)))))
    ok = worst <= 1e-4
    record_criterion(6, f"Ricci identity on {count} random patch/field pairs", ok, f"max {worst:.1e}")
    assert ok


def test_beta_zero_forces_triviality():
    fields = [RadialField.polynomial([0, 1.0], (0.1, 5.0)),
              RadialField.polynomial([1.0, 0.5, -0.2, 0.01], (0.1, 5.0)),
              case_potential(TheoremCase(CaseTag.IV, a=1.0, c=-1.0, c1=1.0), (0.1, 5.0)),
              RadialField((math.sin, math.cos, lambda r: -math.sin(r), lambda r: -math.cos(r)), (0.1, 3.0))]
    ok = True
    for m in (2, 3, 4):
        for F in fields:
            check = triviality_check_beta_zero(m, F)
            sup = max(F(r, 1) ** 2 for r in np.linspace(*F.interval, 201))
            ok &= check.verdict is TrivialityVerdict.FORCED_TRIVIAL and not check.consistent
            ok &= math.isclose(check.residual, (2 * m - 1) * sup, rel_tol=1e-14)
    record_criterion(7, "beta = 0 forces a trivial potential for m = 2, 3, 4", ok)
    assert ok


def test_lambda_constancy():
    grid = np.linspace(0.1, 5.0, 100)
    yamabe, conformal = lookup(YAMABE), lookup(CONFORMAL)
    spread_a = sum_a = 0.0
    for a in (0.5, 1.0, 2.0):
        W, F = build_model(TheoremCase(CaseTag.II_A, a=a))
        rp = reduce(EinsteinTypeParams(yamabe.beta, yamabe.mu, yamabe.rho))
        lam = np.array([lambda_recovery(rp, yamabe.rho, W, F, r) for r in grid])
        R = np.array([scalar_and_derivative(W, r)[0] for r in grid])
        spread_a = max(spread_a, float(np.ptp(lam)))
        sum_a = max(sum_a, float(np.max(np.abs(lam + R))))
    ok_b = True
    for a in (0.5, 1.0, 2.0):
        W, F = build_model(TheoremCase(CaseTag.II_B, a=a))
        rp = reduce(EinsteinTypeParams(conformal.beta, conformal.mu, conformal.rho))
        lam = np.array([lambda_recovery(rp, conformal.rho, W, F, r) for r in grid])
        bphi = np.array([rp.beta * phi(F, rp.c, r) for r in grid])
        ok_b &= bool(np.ptp(lam) <= 1e-8 and np.all(lam == bphi) and abs(lam[0]) > 0)
    ok = spread_a <= 1e-8 and sum_a <= 1e-8 and ok_b
    record_criterion(8, "lambda constant: cylinder Yamabe (lambda + R = 0), Euclidean conformal (lambda = beta phi != 0)",
                     ok, f"cylinder spread {spread_a:.1e}, |lambda + R| {sum_a:.1e}")
    assert ok


def test_sigma_k_round_sphere():
    W = WarpedMetric(WarpingProfile.sine(interval=(0.05, 3.0)), S3)
    pack = curvature(to_patch(W), patch_point(W, 1.1))
    errs = {k: abs(schouten_sigma_k(pack, pack.metric, 4, k) - comb(4, k) / 2 ** k) for k in (1, 2)}
    ok = max(errs.values()) <= 1e-6
    record_criterion(9, "sigma_k of the round 4-sphere via finite differences", ok,
                     ", ".join(f"k={k}: {e:.1e}" for k, e in errs.items()))
    assert ok


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "einstein_type.cli", *args], capture_output=True, text=True,
                          timeout=120)


def test_cli_contract(tmp_path):
    iv = ["--case", "IV", "--a", "1", "--c", "-1", "--c1", "1", "--grid", "0.1:5:100"]
    passing = _cli("verify", *iv)
    failing = _cli("verify", *iv, "--tol-algebraic", "1e-300")
    config = _cli("verify", "--case", "I")
    again = _cli("verify", *iv)
    docs = [json.loads(p.stdout) for p in (passing, again)]
    for d in docs:
        d.pop("timing")
    ok = (passing.returncode, failing.returncode, config.returncode) == (0, 1, 2)
    ok &= docs[0] == docs[1] and "no non-trivial" in config.stderr
    record_criterion(10, "CLI exit codes 0/1/2 and deterministic JSON", ok,
                     f"codes {passing.returncode}/{failing.returncode}/{config.returncode}")
    assert ok
