"""
Invariant suites behind ``eulerspline verify``.

Each suite returns a list of :class:`Check` rows. A check fails on the
first disagreeing entry and records where (d, k, j, n) and both values.
Rows with status ``info`` record known-false variants of an identity
(the first counterexample) and never change the exit status.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

import mpmath
import numpy as np

from . import asymptotics, bspline, combinat, hermite, oracle
from .errors import DomainError, VerificationError

__all__ = ["Check", "SUITES", "CAPS", "DEFAULTS", "run_suite", "run_all"]

SUITES = ("bridges", "oracle", "recurrences", "hermite", "sincbound")
CAPS = {"bridges": 25, "oracle": oracle.MAX_ORDER, "recurrences": 25, "hermite": 40, "sincbound": 1000}
DEFAULTS = {"bridges": 25, "oracle": 8, "recurrences": 25, "hermite": 12, "sincbound": 200}
DESCENT_MODULI = (1, 2, 3, 5)


@dataclass
class Check:
    suite: str
    check: str
    cases: int = 0
    status: str = "pass"
    failure: dict = field(default_factory=dict)

    def compare(self, left, right, **where) -> bool:
        """Count one case; on the first mismatch record it and mark the check failed."""
        self.cases += 1
        if left == right:
            return True
        if self.status != "fail":
            self.status = "fail"
            self.failure = {**where, "left": str(left), "right": str(right)}
        return False

    @property
    def failed(self) -> bool:
        return self.status == "fail"


class _Faults:
    """Test hook: perturb one entry of a named table so failure paths can be exercised."""

    def __init__(self, fault: str | None):
        self.fault = fault

    def eulerian(self, row: list[int]) -> list[int]:
        if self.fault == "eulerian" and len(row) > 1:
            row = list(row)
            row[1] += 1
        return row

    def refined(self, values: dict) -> dict:
        if self.fault == "refined" and values:
            values = dict(values)
            key = min(values)
            values[key] += 1
        return values

    def descent(self, row: list[int]) -> list[int]:
        if self.fault == "descent":
            row = list(row)
            row[0] += 1
        return row


FAULTS = ("eulerian", "refined", "descent")


def _suite_bridges(d_max: int, faults: _Faults) -> list[Check]:
    eul = Check("bridges", "eulerian explicit = recurrence = d! B_{d+1}(k)")
    des = Check("bridges", "descent explicit = recurrence = d! n^d B_{d+1}(k+1/n)")
    ref = Check("bridges", "refined explicit = recurrence = lambda-coefficients = derivative sum")
    for d in range(d_max + 1):
        row = faults.eulerian(list(combinat.eulerian_recurrence_table(d).values))
        for k in range(d + 1):
            e = combinat.eulerian_explicit(d, k)
            eul.compare(e, row[k], d=d, k=k, route="recurrence")
            eul.compare(e, bspline.bridge_eulerian(d, k), d=d, k=k, route="bridge")
        for n in DESCENT_MODULI:
            drow = faults.descent(list(combinat.descent_recurrence_table(d, n).values))
            for k in range(d + 1):
                e = combinat.descent_explicit(d, n, k)
                des.compare(e, drow[k], d=d, n=n, k=k, route="recurrence")
                des.compare(e, bspline.bridge_descent(d, n, k), d=d, n=n, k=k, route="bridge")
        if d >= 1:
            table = faults.refined(combinat.refined_recurrence_table(d, verify=True).values)
            for k in range(d):
                coeff = bspline.bridge_refined_coeff(d - 1, k)
                dsum = bspline.refined_derivative_sums(d - 1, k)
                for j in range(1, d + 1):
                    e = combinat.refined_explicit(d, k, j)
                    ref.compare(e, table.get((k, j), 0), d=d, k=k, j=j, route="recurrence")
                    ref.compare(e, coeff[d - j], d=d, k=k, j=j, route="lambda-coefficients")
                    ref.compare(e, dsum[d - j], d=d, k=k, j=j, route="derivative sum")
    return [eul, des, ref]


def _suite_oracle(d_max: int, faults: _Faults) -> list[Check]:
    eul = Check("oracle", "enumeration = A(d,k) by explicit, recurrence, bridge")
    ref = Check("oracle", "enumeration = R(d,k,j) by explicit, recurrences, lambda-coefficients, derivative sum")
    last = Check("oracle", "R(d+1,k,d+1) = A(d,k+1)")
    literal = Check("oracle", "unshifted R(d+1,k,d+1) = A(d+1,k)", status="info")
    short = Check("oracle", "short-form derivative sum (-1)^i/C(d-j+i,i)", status="info")
    for d in range(1, d_max + 1):
        hist = oracle.enumerate_descents(d)
        row = faults.eulerian(list(combinat.eulerian_recurrence_table(d).values))
        for k in range(d + 1):
            truth = hist.eulerian(k)
            eul.compare(truth, combinat.eulerian_explicit(d, k), d=d, k=k, route="explicit")
            eul.compare(truth, row[k], d=d, k=k, route="recurrence")
            eul.compare(truth, bspline.bridge_eulerian(d, k), d=d, k=k, route="bridge")
        table = faults.refined(combinat.refined_recurrence_table(d, verify=True).values)
        for k in range(d):
            coeff = bspline.bridge_refined_coeff(d - 1, k)
            dsum = bspline.refined_derivative_sums(d - 1, k)
            for j in range(1, d + 1):
                truth = hist.refined(k, j)
                ref.compare(truth, combinat.refined_explicit(d, k, j), d=d, k=k, j=j, route="explicit")
                ref.compare(truth, table.get((k, j), 0), d=d, k=k, j=j, route="recurrence")
                ref.compare(truth, coeff[d - j], d=d, k=k, j=j, route="lambda-coefficients")
                ref.compare(truth, dsum[d - j], d=d, k=k, j=j, route="derivative sum")
                value = bspline.derivative_sum_value(
                    d - 1, k, d - j, coefficients=bspline.short_form_derivative_sum_coefficients)
                _info_compare(short, truth, value, d=d, k=k, j=j)
    if d_max >= 2:
        audit = oracle.audit_last_letter_relation(min(d_max - 1, oracle.MAX_ORDER - 1))
        for d, k, r, lit, shifted in audit.rows:
            last.compare(r, shifted, d=d, k=k)
            _info_compare(literal, r, lit, d=d, k=k)
    return [eul, ref, last, literal, short]


def _info_compare(check: Check, left, right, **where) -> None:
    # informational: record the first disagreement without failing
    check.cases += 1
    if left != right and not check.failure:
        check.failure = {**where, "left": str(left), "right": str(right)}


def _suite_recurrences(d_max: int, faults: _Faults) -> list[Check]:
    sums = Check("recurrences", "row sums d!, d!, n^d d!")
    sym = Check("recurrences", "A(d,k) = A(d,d+1-k)")
    red = Check("recurrences", "D(d,1,k) = A(d,k+1)")
    agg = Check("recurrences", "sum_j R(d,k,j) = A(d,k+1)")
    two = Check("recurrences", "both refined recurrences agree")
    for d in range(d_max + 1):
        row = faults.eulerian(list(combinat.eulerian_recurrence_table(d).values))
        sums.compare(sum(row), factorial(d), d=d, family="eulerian")
        for k in range(1, d + 1):
            sym.compare(row[k], row[d + 1 - k], d=d, k=k)
        for n in DESCENT_MODULI:
            drow = faults.descent(list(combinat.descent_recurrence_table(d, n).values))
            sums.compare(sum(drow), n ** d * factorial(d), d=d, n=n, family="descent")
            if n == 1 and d >= 1:
                for k in range(d):
                    red.compare(drow[k], row[k + 1], d=d, k=k)
        if d >= 1:
            try:
                table = combinat.refined_recurrence_table(d, verify=True)
                two.compare(True, True, d=d)
            except VerificationError as exc:
                two.compare("disagree", "agree", d=d, detail=str(exc))
                continue
            values = faults.refined(table.values)
            sums.compare(sum(values.values()), factorial(d), d=d, family="refined")
            for k in range(d):
                agg.compare(sum(values.get((k, j), 0) for j in range(1, d + 1)), row[k + 1], d=d, k=k)
    return [sums, sym, red, agg, two]


def _suite_hermite(n_max: int, faults: _Faults) -> list[Check]:
    routes = Check("hermite", "recurrence = Rodrigues")
    shape = Check("hermite", "monic, degree n, parity (-1)^n")
    phys = Check("hermite", "physicists sum = 2^(n/2) He_n(sqrt(2) x)")
    fd = Check("hermite", "finite differences of exp(-x^2/2), h=1e-3, rtol 1e-5")
    seq = hermite.hermite_prob(n_max)
    rod = hermite.hermite_rodrigues(n_max)
    for n in range(n_max + 1):
        p = seq[n]
        routes.compare(p, rod[n], n=n)
        shape.compare((p.degree, p.coeffs[-1]), (n, 1), n=n)
        shape.compare(all(c == 0 for m, c in enumerate(p.coeffs) if (m + n) % 2), True, n=n)
        phys.compare(hermite.physicists_sum(n), hermite.physicists_from_prob(p, n), n=n)
    for i in range(min(n_max, 6) + 1):
        err, scale = gaussian_derivative_fd_error(seq, i)
        fd.compare(err <= 1e-5 * scale, True, n=i, error=f"{err:.3e}", scale=f"{scale:.3e}")
    return [routes, shape, phys, fd]


def gaussian_derivative_fd_error(seq, i: int, h: float = 1e-3, xs=None) -> tuple[float, float]:
    """Max |central difference of (-1)^i D^i exp(-x^2/2) - He_i(x) exp(-x^2/2)| on a grid.

    Differences run in 40-digit arithmetic so the only error left is the
    O(h^2) truncation. Returns (max error, max |exact|); the tolerance is
    applied relative to the latter because He_i has zeros on the grid.
    """
    xs = np.linspace(-3, 3, 25) if xs is None else xs
    worst = scale = 0.0
    with mpmath.workdps(40):
        H = mpmath.mpf(h)
        for x in xs:
            X = mpmath.mpf(float(x))
            diff = mpmath.fsum(
                (-1) ** m * mpmath.binomial(i, m) * mpmath.exp(-(X + (mpmath.mpf(i) / 2 - m) * H) ** 2 / 2)
                for m in range(i + 1)
            ) / H ** i
            exact = hermite.hermite_eval(seq, i, X) * mpmath.exp(-X * X / 2)
            worst = max(worst, float(abs((-1) ** i * diff - exact)))
            scale = max(scale, float(abs(exact)))
    return worst, scale


def _suite_sincbound(d_max: int, faults: _Faults) -> list[Check]:
    xs = np.arange(-500, 501) / 10
    out = []
    for k in (0, 1, 2):
        c = Check("sincbound", f"pi^k|x|^k|sinc(pi x/sqrt d)|^d <= G_k(x), k={k}")
        if d_max < k + 2:
            out.append(c)
            continue
        report = asymptotics.sinc_bound_check(k, range(k + 2, d_max + 1), xs)
        c.cases = report.samples_checked
        if report.violations:
            d, x, lhs, bound = report.violations[0]
            c.status = "fail"
            c.failure = {"d": d, "x": x, "left": repr(lhs), "right": repr(bound)}
        out.append(c)
    return out


_RUNNERS = {
    "bridges": _suite_bridges,
    "oracle": _suite_oracle,
    "recurrences": _suite_recurrences,
    "hermite": _suite_hermite,
    "sincbound": _suite_sincbound,
}


def run_suite(suite: str, d_max: int | None = None, fault: str | None = None) -> list[Check]:
    if suite not in _RUNNERS:
        raise DomainError(f"unknown suite {suite!r}; expected one of {SUITES}")
    if d_max is None:
        d_max = DEFAULTS[suite]
    if not 0 <= d_max <= CAPS[suite]:
        raise DomainError(f"{suite}: d_max must be in 0..{CAPS[suite]}, got {d_max}")
    if fault is not None and fault not in FAULTS:
        raise DomainError(f"unknown fault {fault!r}")
    return _RUNNERS[suite](d_max, _Faults(fault))


def run_all(d_max: int | None = None, fault: str | None = None) -> list[Check]:
    """Every suite; an explicit d_max is clamped to each suite's cap."""
    checks = []
    for suite in SUITES:
        cap = DEFAULTS[suite] if d_max is None else min(d_max, CAPS[suite])
        checks.extend(run_suite(suite, cap, fault))
    return checks
