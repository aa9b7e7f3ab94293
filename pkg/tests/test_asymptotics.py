import math

import numpy as np
import pytest

from eulerspline import asymptotics as asy
from eulerspline.errors import DomainError


def test_fit_recovers_a_power_law():
    ds = (10, 20, 40, 80, 160)
    scan = asy.ErrorScan("eulerian", {}, tuple((d, 3.0 * d ** -1.5) for d in ds))
    fit = asy.fit_convergence_order(scan)
    assert fit.slope == pytest.approx(-1.5, abs=1e-12)
    assert fit.intercept == pytest.approx(math.log(3.0), abs=1e-12)
    assert fit.r_squared == pytest.approx(1.0)
    assert asy.band_verdict("eulerian", fit)
    assert not asy.band_verdict("bspline", fit)


def test_fit_needs_three_positive_samples():
    with pytest.raises(DomainError):
        asy.fit_convergence_order(asy.ErrorScan("eulerian", {}, ((1, 1.0), (2, 0.5))))
    with pytest.raises(DomainError):
        asy.fit_convergence_order(asy.ErrorScan("eulerian", {}, ((1, 1.0), (2, 0.0), (3, 1.0))))


def test_grid_validation():
    with pytest.raises(DomainError):
        asy.GridSpec(1.0, -1.0)
    with pytest.raises(DomainError):
        asy.GridSpec(mode="nearest")
    pts = asy.GridSpec.window(1.0, "floor").floor_points()
    assert pts[0] == -1 and pts[-1] == 1 and len(pts) == 41


def test_gaussian_profile_has_unit_lattice_mass():
    for d in (32, 128, 512):
        assert asy.eulerian_lattice_mass(d) == pytest.approx(1.0, abs=1e-6)


def test_scan_is_independent_of_worker_count():
    one = asy.error_scan("eulerian", {}, (32, 45, 64))
    two = asy.error_scan("eulerian", {}, (32, 45, 64), workers=2)
    assert one == two


def test_scan_rejects_bad_input():
    with pytest.raises(DomainError):
        asy.error_scan("eulerian", {}, (64, 32, 128))
    with pytest.raises(DomainError):
        asy.error_scan("catalan", {}, (32, 64, 128))
    with pytest.raises(DomainError):
        asy.error_scan("bspline", {"r": 2}, (4, 8, 16))
    with pytest.raises(DomainError):
        asy.error_scan("descent", {"n": 2, "centering": "median"}, (32, 64, 128))


def test_corrected_descent_centering_matches_eulerian_for_n1():
    # D(d, 1, k) = A(d, k + 1): shifting by 1/sigma is one lattice step
    e = asy.error_scan("eulerian", {}, (32, 64, 128))
    dsc = asy.error_scan("descent", {"n": 1, "centering": "corrected"}, (32, 64, 128))
    for (_, a), (_, b) in zip(e.samples, dsc.samples):
        assert b == pytest.approx(a, rel=0.5)


@pytest.mark.parametrize("n", [2, 3])
def test_corrected_descent_centering_converges_at_three_halves(n):
    scan = asy.error_scan("descent", {"n": n, "centering": "corrected"}, asy.DEFAULT_D_LISTS["descent"])
    assert asy.band_verdict("descent", asy.fit_convergence_order(scan))


@pytest.mark.parametrize("j", [0, 1, 2, 3])
def test_corrected_refined_centering_converges(j):
    scan = asy.error_scan("refined", {"j": j, "centering": "corrected"}, asy.DEFAULT_D_LISTS["refined"])
    assert asy.band_verdict("refined", asy.fit_convergence_order(scan))


def test_floor_mode_is_dominated_by_rounding():
    scan = asy.error_scan("eulerian", {}, asy.DEFAULT_D_LISTS["eulerian"], asy.GridSpec(mode="floor"))
    fit = asy.fit_convergence_order(scan)
    lattice = asy.fit_convergence_order(asy.error_scan("eulerian", {}, asy.DEFAULT_D_LISTS["eulerian"]))
    assert fit.slope > lattice.slope


def test_sinc_constants():
    assert asy.sinc_constant(0)[0] == pytest.approx(2.0, rel=1e-15)
    assert asy.sinc_constant(1)[0] == pytest.approx(3 ** 1.5, rel=1e-15)
    assert asy.sinc_constant(2)[0] == 16.0


def test_sinc_envelope_touches_at_smallest_order():
    # d = k + 2 and odd integer x: the sinc term equals the c_k tail exactly
    report = asy.sinc_bound_check(2, [4], np.array([3.0, 5.0, 7.0]))
    assert report.ok


def test_sinc_bound_rejects_small_d():
    with pytest.raises(DomainError):
        asy.sinc_bound_check(2, [3], np.array([1.0]))


def test_public_approximations():
    assert asy.gaussian_phi(0.0) == pytest.approx(1 / math.sqrt(2 * math.pi))
    assert asy.descent_approx(63, 2, -0.5) == pytest.approx(asy.eulerian_approx(63, 0.0))
    assert asy.refined_approx(63, 0, 0.3) == pytest.approx(asy.eulerian_approx(63, 0.3))
    assert asy.bspline_gaussian_approx(10, 1, 1.0) == pytest.approx(-asy.gaussian_phi(1.0))
    with pytest.raises(DomainError):
        asy.bspline_gaussian_approx(3, 1, 0.0)
