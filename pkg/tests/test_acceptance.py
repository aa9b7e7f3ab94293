"""
The ten acceptance criteria, each at its stated tolerance.

Every test records a PASS/FAIL line (shown in the terminal summary) before
asserting, so a failing criterion still reports what was measured.
"""

import subprocess
import sys
import time

import numpy as np

from eulerspline import asymptotics as asy
from eulerspline import bspline, hermite, verify

SCAN_D = (32, 45, 64, 91, 128, 181, 256)
BSPLINE_D = (16, 32, 64, 128, 256, 512)


def _fit(family, params, d_list):
    return asy.fit_convergence_order(asy.error_scan(family, params, d_list))


def _suite_clean(checks):
    failed = [c for c in checks if c.failed]
    return not failed, failed


def test_c01_oracle_equivalence(criterion):
    t0 = time.perf_counter()
    checks = verify.run_suite("oracle", 8)
    elapsed = time.perf_counter() - t0
    ok, failed = _suite_clean(checks)
    cases = sum(c.cases for c in checks if c.status != "info")
    detail = f"d<=8, {cases} exact comparisons, {elapsed:.2f}s (limit 10s)"
    if failed:
        detail += f"; first failure {failed[0].check}: {failed[0].failure}"
    assert criterion(1, ok and elapsed < 10, detail)


def test_c02_triple_agreement_at_scale(criterion):
    t0 = time.perf_counter()
    checks = verify.run_suite("bridges", 25)
    elapsed = time.perf_counter() - t0
    ok, failed = _suite_clean(checks)
    cases = sum(c.cases for c in checks)
    detail = f"d<=25, n in {{1,2,3,5}}, {cases} exact comparisons, {elapsed:.2f}s (limit 60s)"
    if failed:
        detail += f"; first failure {failed[0].check}: {failed[0].failure}"
    assert criterion(2, ok and elapsed < 60, detail)


def test_c03_eulerian_order(criterion):
    t0 = time.perf_counter()
    fit = _fit("eulerian", {}, SCAN_D)
    elapsed = time.perf_counter() - t0
    ok = -1.7 <= fit.slope <= -1.3 and fit.r_squared >= 0.98 and elapsed < 120
    assert criterion(3, ok, f"slope {fit.slope:.4f} in [-1.7,-1.3], r2 {fit.r_squared:.4f} >= 0.98, "
                            f"{elapsed:.2f}s (limit 120s)")


def test_c04_descent_order_and_peak(criterion):
    parts, ok = [], True
    for n in (2, 3):
        fit = _fit("descent", {"n": n}, SCAN_D)
        good = -1.7 <= fit.slope <= -1.3 and fit.r_squared >= 0.98
        ok &= good
        parts.append(f"n={n} slope {fit.slope:.4f} r2 {fit.r_squared:.4f} {'ok' if good else 'out of band'}")
    misses = []
    for n in (2, 3):
        for d in SCAN_D:
            x_peak, step = asy.descent_peak(d, n)
            if abs(x_peak + 1 / n) > step:
                misses.append(f"(n={n},d={d}: peak {x_peak:.3f}, step {step:.3f})")
    ok &= not misses
    parts.append("peak within one step of -1/n for every d" if not misses
                 else f"peak misses -1/n by more than a step at {len(misses)} of 14: " + " ".join(misses[:2]))
    assert criterion(4, ok, "; ".join(parts))


def test_c05_refined_order_and_hermite_gain(criterion):
    parts, ok = [], True
    for j in (0, 1, 2, 3):
        fit = _fit("refined", {"j": j}, SCAN_D)
        good = fit.slope <= -1.3 and fit.r_squared >= 0.95
        ok &= good
        parts.append(f"j={j} slope {fit.slope:.4f} r2 {fit.r_squared:.4f}{'' if good else ' (miss)'}")
    gauss = asy.error_scan("refined", {"j": 1, "approx_j": 0}, [64]).errors[0]
    herm = asy.error_scan("refined", {"j": 1}, [64]).errors[0]
    gain = herm < gauss
    ok &= gain
    parts.append(f"d=64 j=1 sup error {herm:.6g} vs Gaussian {gauss:.6g} ({'smaller' if gain else 'not smaller'})")
    assert criterion(5, ok, "; ".join(parts))


def test_c06_bspline_order(criterion):
    parts, ok = [], True
    for r in (0, 1, 2):
        fit = _fit("bspline", {"r": r}, BSPLINE_D)
        good = -1.15 <= fit.slope <= -0.85
        ok &= good
        parts.append(f"r={r} slope {fit.slope:.4f}")
    assert criterion(6, ok, ", ".join(parts) + " in [-1.15,-0.85]")


def test_c07_fourier_identity(criterion):
    worst = max(bspline.fourier_check(d, w) for d in range(1, 11) for w in (0.5, 1.0, 2.0, 5.0))
    assert criterion(7, worst < 1e-8, f"max residual {worst:.3e} < 1e-8 over d<=10, 4 frequencies")


def test_c08_sinc_envelope(criterion):
    xs = np.arange(-500, 501) / 10
    reports = [asy.sinc_bound_check(k, range(k + 2, 201), xs) for k in (0, 1, 2)]
    violations = sum(len(r.violations) for r in reports)
    samples = sum(r.samples_checked for r in reports)
    consts = ", ".join(f"c_{r.k}={r.c_k:.6g}" for r in reports)
    assert criterion(8, violations == 0, f"{violations} violations in {samples} samples ({consts})")


def test_c09_hermite_consistency(criterion):
    exact = list(hermite.hermite_prob(12).polys) == hermite.hermite_rodrigues(12)
    seq = hermite.hermite_prob(6)
    ratios = []
    for i in range(7):
        err, scale = verify.gaussian_derivative_fd_error(seq, i)
        ratios.append(err / scale)
    ok = exact and max(ratios) <= 1e-5
    assert criterion(9, ok, f"routes {'agree' if exact else 'differ'} to degree 12; "
                            f"worst FD relative error {max(ratios):.2e} <= 1e-5 for i<=6")


def _cli(*argv):
    r = subprocess.run([sys.executable, "-m", "eulerspline.cli", *argv], capture_output=True)
    return r.returncode, r.stdout


CLI_RUNS = [
    (("table", "eulerian", "--d", "25"), 0),
    (("table", "refined", "--d", "9", "--format", "json"), 0),
    (("table", "descent", "--d", "12", "--n", "5"), 0),
    (("verify", "all", "--d-max", "8"), 0),
    (("verify", "all", "--d-max", "8", "--inject-fault", "descent"), 1),
    (("scan", "eulerian"), 0),
    (("scan", "descent", "--n", "2", "--centering", "corrected", "--format", "json"), 0),
    (("scan", "bspline", "--deriv", "2", "--d-list", "16,32,64,128"), 0),
    (("scan", "refined", "--j", "1", "--enforce"), 1),
    (("table", "eulerian", "--d", "-2"), 2),
    (("verify", "oracle", "--d-max", "12"), 2),
]


def test_c10_cli_determinism(criterion):
    problems = []
    for argv, code in CLI_RUNS:
        first, second = _cli(*argv), _cli(*argv)
        if first != second:
            problems.append(f"{' '.join(argv)}: output differs between runs")
        if first[0] != code:
            problems.append(f"{' '.join(argv)}: exit {first[0]}, expected {code}")
    serial = _cli("scan", "eulerian", "--workers", "1")
    parallel = _cli("scan", "eulerian", "--workers", "3")
    if serial != parallel:
        problems.append("scan output depends on --workers")
    ok = not problems
    assert criterion(10, ok, f"{len(CLI_RUNS)} commands run twice, exit codes 0/1/2 checked"
                             + ("" if ok else "; " + "; ".join(problems)))
