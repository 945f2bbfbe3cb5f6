import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from einstein_type.errors import (DimensionError, InsufficientSmoothnessError, InvalidParametersError,
                                  OutOfDomainError, UnsupportedChartError)
from einstein_type.geometry import curvature
from einstein_type.records import (dump_record, parse_record, potential_from_record, potential_to_record,
                                   profile_from_record, profile_to_record)
from einstein_type.soliton import key3_residual
from einstein_type.suite import random_spline_potential, random_trigonometric_profile
from einstein_type.warped import (FiberSpec, RadialField, WarpedMetric, WarpingProfile, patch_point,
                                  radial_hessian, radial_laplacian, ricci_fiber, ricci_radial,
                                  scalar_and_derivative, scalar_curvature, to_patch)

S3 = FiberSpec.sphere(3)


def cylinder(a=1.0):
    return WarpedMetric(WarpingProfile.constant(a), S3)


def cone(n=4, fiber="sphere"):
    spec = FiberSpec.sphere(n - 1) if fiber == "sphere" else FiberSpec.flat(n - 1)
    return WarpedMetric(WarpingProfile.linear(1.0), spec)


def round_sphere():
    return WarpedMetric(WarpingProfile.sine(interval=(0.05, 3.0)), S3)


def iv_potential(interval=(1e-2, 10.0)):
    # log(r^2/2 + 1) written out so the test does not lean on the cases module
    return RadialField((lambda r: math.log(r * r / 2 + 1),
                        lambda r: 2 * r / (r * r + 2),
                        lambda r: (4 - 2 * r * r) / (r * r + 2) ** 2,
                        lambda r: (4 * r ** 3 - 24 * r) / (r * r + 2) ** 3), interval)


@pytest.mark.parametrize("W", [cylinder(1.3), cone()], ids=["cylinder", "cone"])
def test_ricci_radial_vanishes_for_affine_warping(W):
    assert ricci_radial(W, 0.7) == 0.0


def test_round_sphere_ricci():
    W = round_sphere()
    assert ricci_radial(W, math.pi / 4) == pytest.approx(3.0, rel=1e-14)
    assert ricci_fiber(W, math.pi / 4) == pytest.approx(3.0, rel=1e-14)


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_cone_fiber_eigenvalue_vanishes(n):
    assert ricci_fiber(cone(n), 1.7) == 0.0


@pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
def test_cylinder_fiber_eigenvalue_and_scalar(a):
    W = cylinder(a)
    assert ricci_fiber(W, 2.0) == pytest.approx(2 / a ** 2, rel=1e-14)
    R, dR = scalar_and_derivative(W, 2.0)
    assert R == pytest.approx(6 / a ** 2, rel=1e-14)
    assert dR == 0.0


def test_cone_and_sphere_scalar():
    assert scalar_and_derivative(cone(), 0.4) == (0.0, 0.0)
    R, dR = scalar_and_derivative(round_sphere(), 1.0)
    assert R == pytest.approx(12.0, rel=1e-13)
    assert dR == pytest.approx(0.0, abs=1e-12)


def test_out_of_interval_is_rejected():
    W = round_sphere()
    for fn in (ricci_radial, ricci_fiber, scalar_curvature, scalar_and_derivative):
        with pytest.raises(OutOfDomainError):
            fn(W, 3.5)


def test_radial_hessian_examples():
    assert radial_hessian(cone(), RadialField.polynomial([0, 0, 0.5]), 1.3) == pytest.approx((1.0, 1.0))
    assert radial_hessian(cylinder(2.0), RadialField.polynomial([1.0, 0.7]), 1.3) == (0.0, 0.0)
    hr, hf = radial_hessian(cone(), iv_potential(), 1.0)
    assert hr == pytest.approx(2 / 9, rel=1e-14)
    assert hf == pytest.approx(2 / 3, rel=1e-14)


def test_radial_laplacian_examples():
    assert radial_laplacian(cone(), RadialField.polynomial([0, 0, 0.5]), 2.2) == pytest.approx(4.0)
    assert radial_laplacian(cylinder(), RadialField.polynomial([0, 3.0]), 2.2) == 0.0
    assert radial_laplacian(cone(), iv_potential(), 1.0) == pytest.approx(20 / 9, rel=1e-14)


@given(st.floats(0.6, 1.9), st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_laplacian_is_trace_of_hessian(r, seed):
    rng = np.random.default_rng(seed)
    W = WarpedMetric(random_trigonometric_profile(rng), S3)
    F = random_spline_potential(rng)
    hr, hf = radial_hessian(W, F, r)
    assert radial_laplacian(W, F, r) == pytest.approx(hr + 3 * hf, rel=1e-13, abs=1e-13)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_flat_cone_all_curvature_zero(n):
    W = cone(n)
    for r in (0.1, 1.0, 7.5):
        assert ricci_radial(W, r) == 0 and ricci_fiber(W, r) == 0
        assert scalar_and_derivative(W, r) == (0.0, 0.0)


# coordinate realization ------------------------------------------------------

def test_to_patch_cylinder_matches_closed_form():
    W = cylinder()
    pack = curvature(to_patch(W), patch_point(W, 3.0))
    assert pack.scalar == pytest.approx(6.0, abs=1e-4)


def test_to_patch_cone_is_flat():
    W = cone()
    pack = curvature(to_patch(W), patch_point(W, 2.0))
    assert np.max(np.abs(pack.riemann)) < 1e-4


@pytest.mark.parametrize("n", [3, 4])
def test_to_patch_torus_cone_fiber_eigenvalue(n):
    W = cone(n, fiber="flat")
    r = 1.5
    pack = curvature(to_patch(W), patch_point(W, r))
    expected = -(n - 2) / r ** 2
    assert ricci_fiber(W, r) == pytest.approx(expected, rel=1e-14)
    assert pack.ricci[1, 1] / pack.metric[1, 1] == pytest.approx(expected, abs=1e-4)


@pytest.mark.parametrize("chart,n", [("circle", 2), ("sphere2", 3)])
def test_lower_dimensional_sphere_charts(chart, n):
    W = WarpedMetric(WarpingProfile.sine(interval=(0.05, 3.0)), FiberSpec.sphere(n - 1))
    pack = curvature(to_patch(W, chart), patch_point(W, 1.2, chart))
    assert pack.scalar == pytest.approx(n * (n - 1), abs=1e-4)


def test_unsupported_charts():
    with pytest.raises(UnsupportedChartError):
        to_patch(WarpedMetric(WarpingProfile.constant(1.0), FiberSpec.sphere(4)))
    with pytest.raises(UnsupportedChartError):
        to_patch(cylinder(), "torus")
    with pytest.raises(UnsupportedChartError):
        to_patch(cylinder(), "hyperbolic")
    with pytest.raises(UnsupportedChartError):
        to_patch(WarpedMetric(WarpingProfile.constant(1.0), FiberSpec.einstein(3, -1.0)))


def test_random_profiles_agree_with_finite_differences():
    rng = np.random.default_rng(11)
    h = 1e-3
    for _ in range(20):
        W = WarpedMetric(random_trigonometric_profile(rng), S3)
        patch = to_patch(W)
        r = rng.uniform(0.8, 1.7)
        pack = curvature(patch, patch_point(W, r))
        assert pack.ricci[0, 0] == pytest.approx(ricci_radial(W, r), abs=1e-4)
        for i in (1, 2, 3):
            assert pack.ricci[i, i] / pack.metric[i, i] == pytest.approx(ricci_fiber(W, r), abs=1e-4)
        R, dR = scalar_and_derivative(W, r)
        assert pack.scalar == pytest.approx(R, abs=1e-4)
        up, down = (curvature(patch, patch_point(W, r + s)).scalar for s in (h, -h))
        assert (up - down) / (2 * h) == pytest.approx(dR, abs=1e-3)


def test_sampled_profile_reproduces_closed_form():
    exact = WarpingProfile.polynomial([1.0, 0.3, -0.02], (0.1, 10.0))
    sampled = WarpingProfile.sampled_from(exact, 200)
    assert sampled.representation == "sampled-spline"
    assert not sampled.has_third_derivative
    grid = np.linspace(0.1, 10.0, 997)
    assert max(abs(sampled(r) - exact(r)) for r in grid) <= 1e-6
    sine = WarpingProfile.sine(interval=(0.1, 3.0))
    ss = WarpingProfile.sampled_from(sine, 200)
    assert max(abs(ss(r) - sine(r)) for r in np.linspace(0.1, 3.0, 577)) <= 1e-6


def test_sampled_profile_scalar_derivative_is_differenced():
    W = WarpedMetric(WarpingProfile.sampled_from(WarpingProfile.sine(interval=(0.1, 3.0)), 200), S3)
    for r in (0.5, 1.0, 2.0, 2.8):
        R, dR = scalar_and_derivative(W, r)
        assert R == pytest.approx(12.0, abs=1e-3)
        assert abs(dR) < 5e-2
    # one-sided at the ends: still finite, just less accurate
    for r in W.interval:
        R, dR = scalar_and_derivative(W, r)
        assert R == pytest.approx(12.0, abs=1e-2) and abs(dR) < 0.5
    F = RadialField.polynomial([0, 1.0], W.interval)
    with pytest.raises(InsufficientSmoothnessError):
        key3_residual(W, F, 0.0, 1.0)


def test_potential_derivative_levels_consistent():
    F = iv_potential()
    assert F.levels == 4
    for r in (0.5, 1.0, 4.0):
        assert F.consistency_defect(r) < 1e-6
    assert RadialField.polynomial([1, 2, 3, 4, 5]).levels == 5


def test_invalid_constructions():
    with pytest.raises(InvalidParametersError):
        WarpingProfile.constant(1.0, (2.0, 1.0))
    with pytest.raises(InvalidParametersError):
        RadialField((math.sin, math.cos), (0.0, 1.0))
    with pytest.raises(InvalidParametersError):
        FiberSpec(3, 2.0, "sphere").validated()
    with pytest.raises(DimensionError):
        FiberSpec.sphere(0)
    with pytest.raises(OutOfDomainError):
        WarpingProfile.linear(1.0, -1.0).jet(0.5)


# serialization ---------------------------------------------------------------

@pytest.mark.parametrize("profile", [
    WarpingProfile.constant(1.5),
    WarpingProfile.linear(2.0, 0.1),
    WarpingProfile.sine(1.0, 0.5),
    WarpingProfile.polynomial([1.0, 0.25, 0.125]),
    WarpingProfile.trigonometric(1.5, [(0.1, 2.0, 0.3)]),
    WarpingProfile.sampled_from(WarpingProfile.sine(interval=(0.2, 2.0)), 30),
], ids=lambda p: p.tag)
def test_profile_record_round_trip(profile):
    back = profile_from_record(parse_record(dump_record(profile_to_record(profile))))
    assert back.interval == profile.interval
    for r in np.linspace(*profile.interval, 7):
        for k in range(3):
            assert back(r, k) == profile(r, k)


def test_potential_record_round_trip():
    F = random_spline_potential(np.random.default_rng(3))
    back = potential_from_record(parse_record(dump_record(potential_to_record(F))))
    for r in np.linspace(*F.interval, 9):
        assert np.array_equal(back.jet(r, 5), F.jet(r, 5))
    P = RadialField.polynomial([0.5, 1.0, -0.25])
    back = potential_from_record(parse_record(dump_record(potential_to_record(P))))
    assert back(1.7, 2) == P(1.7, 2)


def test_record_parsing_errors():
    with pytest.raises(ValueError):
        parse_record("just text\n")
    with pytest.raises(ValueError):
        profile_from_record({"representation": "mystery"})
    assert parse_record("# c\n a = 1 # trailing\n\n") == {"a": "1"}
