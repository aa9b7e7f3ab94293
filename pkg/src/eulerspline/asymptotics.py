"""
Gaussian and Hermite-series approximations of the standardized numbers,
sup-error scans against the exact values, and log-log order fits.

Every scan compares exact rationals with the approximation in mpmath at
``PREC_BITS`` of precision; the difference is rounded to float only at the end.

Two centerings are supported for the descent and refined families:

``"literal"``
    the closed forms taken as written: shift 1/n in the descent exponent, and
    x_d = sqrt((d+1)/12) (x - 1) + (d+1)/2 for refined numbers.
``"corrected"``
    shifts expressed in standardized units: 1/(n sigma) for descents and
    x_d = sqrt((d+1)/12) x + (d+1)/2 - 1 for refined numbers, with
    sigma = sqrt((d+1)/12). The literal shifts do not scale with sigma,
    which leaves an O(d^(-1/2)) error; see the README.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

import mpmath
import numpy as np

from .bspline import bspline_derivative_explicit
from .combinat import descent_explicit, eulerian_explicit, refined_explicit
from .errors import DomainError
from .hermite import HermiteSequence, hermite_eval, hermite_prob
from .numeric import binomial

__all__ = [
    "PREC_BITS", "FAMILIES", "CENTERINGS", "DEFAULT_D_LISTS", "BANDS",
    "GridSpec", "ErrorScan", "SlopeFit", "SincBoundReport",
    "gaussian_phi", "eulerian_approx", "descent_approx", "refined_approx",
    "bspline_gaussian_approx", "error_scan", "fit_convergence_order", "band_verdict",
    "sinc_bound_check", "sinc_constant", "sinc_envelope", "descent_peak", "eulerian_lattice_mass",
]

PREC_BITS = 53 + 40

FAMILIES = ("eulerian", "descent", "refined", "bspline")
CENTERINGS = ("literal", "corrected")

DEFAULT_D_LISTS = {
    "eulerian": (32, 45, 64, 91, 128, 181, 256),
    "descent": (32, 45, 64, 91, 128, 181, 256),
    "refined": (32, 45, 64, 91, 128, 181, 256),
    "bspline": (16, 32, 64, 128, 256, 512),
}

# family -> (slope_lo, slope_hi, min r^2); None means unconstrained
BANDS = {
    "eulerian": (-1.7, -1.3, 0.98),
    "descent": (-1.7, -1.3, 0.98),
    "refined": (None, -1.3, 0.95),
    "bspline": (-1.15, -0.85, None),
}


def _mpf(q) -> mpmath.mpf:
    if isinstance(q, Fraction):
        return mpmath.mpf(q.numerator) / q.denominator
    return mpmath.mpf(q)


def _sigma(d) -> mpmath.mpf:
    return mpmath.sqrt(mpmath.mpf(d + 1) / 12)


# ---- approximations (mpmath core, float wrappers) ----

def _eulerian_approx(d, x):
    return mpmath.sqrt(6 / (mpmath.pi * (d + 1))) * mpmath.exp(-x * x / 2)


def _descent_shift(d, n, centering):
    if centering == "literal":
        return mpmath.mpf(1) / n
    return 1 / (n * _sigma(d))


def _refined_approx(d, j, x, herm):
    total = mpmath.mpf(0)
    scale = mpmath.mpf(d + 1) / 12
    for i in range(j + 1):
        total += hermite_eval(herm, i, x) / binomial(d - j + i, i) * scale ** (-mpmath.mpf(i) / 2)
    return _eulerian_approx(d, x) * total


def _bspline_gaussian_approx(r, x, herm):
    return (-1) ** r * hermite_eval(herm, r, x) * mpmath.exp(-x * x / 2) / mpmath.sqrt(2 * mpmath.pi)


def gaussian_phi(x: float) -> float:
    return math.exp(-x * x / 2) / math.sqrt(2 * math.pi)


def eulerian_approx(d: int, x: float) -> float:
    """sqrt(6 / (pi (d+1))) exp(-x^2/2), the Gaussian profile of A(d, k)/d!."""
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    with mpmath.workprec(PREC_BITS):
        return float(_eulerian_approx(d, _mpf(x)))


def descent_approx(d: int, n: int, x: float, centering: str = "literal") -> float:
    """Approximation of D(d, n, [x_d]) / (d! n^d)."""
    if d < 1 or n < 1:
        raise DomainError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    _check_centering(centering)
    with mpmath.workprec(PREC_BITS):
        x = _mpf(x)
        return float(_eulerian_approx(d, x + _descent_shift(d, n, centering)))


def refined_approx(d: int, j: int, x: float, herm: HermiteSequence | None = None) -> float:
    """Hermite-series approximation of R(d+1, [x_d], d-j+1) / d!."""
    if not 0 <= j <= d:
        raise DomainError(f"need 0 <= j <= d, got d={d}, j={j}")
    herm = herm or _hermite(j)
    with mpmath.workprec(PREC_BITS):
        return float(_refined_approx(d, j, _mpf(x), herm))


def bspline_gaussian_approx(d: int, r: int, x: float) -> float:
    """(1/sqrt(2 pi)) D^r exp(-x^2/2) = (-1)^r He_r(x) phi(x), limit of the scaled B_d^(r)."""
    if d <= r + 2:
        raise DomainError(f"need d > r + 2, got d={d}, r={r}")
    with mpmath.workprec(PREC_BITS):
        return float(_bspline_gaussian_approx(r, _mpf(x), _hermite(r)))


@lru_cache(maxsize=None)
def _hermite(n: int) -> HermiteSequence:
    return hermite_prob(max(n, 1))


def _check_centering(centering: str) -> None:
    if centering not in CENTERINGS:
        raise DomainError(f"centering must be one of {CENTERINGS}, got {centering!r}")


# ---- scans ----

@dataclass(frozen=True)
class GridSpec:
    x_lo: float = -3.0
    x_hi: float = 3.0
    mode: str = "lattice"  # or "floor"
    step: float = 0.05  # spacing of the uniform grid in floor mode

    def __post_init__(self):
        if not self.x_lo < self.x_hi:
            raise DomainError(f"empty window [{self.x_lo}, {self.x_hi}]")
        if self.mode not in ("lattice", "floor"):
            raise DomainError(f"mode must be 'lattice' or 'floor', got {self.mode!r}")

    @classmethod
    def window(cls, w: float, mode: str = "lattice") -> GridSpec:
        return cls(-w, w, mode)

    def floor_points(self) -> list[Fraction]:
        n = int(math.floor((self.x_hi - self.x_lo) / self.step + 1e-9))
        # via repr so that 0.05 means 1/20, not its binary neighbour
        lo, step = Fraction(repr(self.x_lo)), Fraction(repr(self.step))
        return [lo + i * step for i in range(n + 1)]


@dataclass(frozen=True)
class ErrorScan:
    family: str
    params: dict
    samples: tuple[tuple[int, float], ...]  # (d, sup_error)
    argmax: tuple[float, ...] = field(default=())  # standardized x of the worst point per d

    @property
    def d_values(self) -> list[int]:
        return [d for d, _ in self.samples]

    @property
    def errors(self) -> list[float]:
        return [e for _, e in self.samples]


@dataclass(frozen=True)
class SlopeFit:
    slope: float
    intercept: float
    r_squared: float
    d_range: tuple[int, int]


class _Family:
    """Lattice geometry plus exact and approximate values for one family."""

    def __init__(self, family: str, d: int, params: dict):
        self.family, self.d = family, d
        self.n = params.get("n", 1)
        self.j = params.get("j", 0)
        # refined only: Hermite order of the approximation, when it differs from the data's j
        self.approx_j = params.get("approx_j", self.j)
        self.r = params.get("r", 0)
        self.centering = params.get("centering", "literal")
        _check_centering(self.centering)
        if family == "bspline":
            if d <= self.r + 2:
                raise DomainError(f"bspline scan needs d > r + 2, got d={d}, r={self.r}")
            self.scale = mpmath.sqrt(mpmath.mpf(d) / 12)
            self.center = Fraction(d, 2)
            self.herm = _hermite(self.r)
        else:
            self.scale = _sigma(d)
            self.center = Fraction(d + 1, 2)
            if family == "refined":
                if not (0 <= self.j <= d and 0 <= self.approx_j <= d):
                    raise DomainError(f"refined scan needs 0 <= j <= d, got j={self.j}, d={d}")
                self.herm = _hermite(max(self.j, self.approx_j))
                # x = (k - center)/sigma + offset, i.e. x_d = sigma (x - offset) + center
                self.offset = 1 if self.centering == "literal" else 0
                self.k_shift = 0 if self.centering == "literal" else 1
            elif family == "descent":
                if self.n < 1:
                    raise DomainError(f"descent scan needs n >= 1, got {self.n}")
            elif family != "eulerian":
                raise DomainError(f"unknown family {family!r}")
        self._exact_cache: dict = {}

    def k_range(self) -> range:
        return range(0, self.d + 1)

    def x_of_k(self, k: int):
        """Standardized coordinate of lattice index k."""
        if self.family == "refined":
            return (_mpf(k + self.k_shift - self.center)) / self.scale + self.offset
        return _mpf(k - self.center) / self.scale

    def k_of_x(self, x: Fraction) -> int:
        """[x_d]: floor of the unstandardized coordinate."""
        if self.family == "refined":
            xd = self.scale * (_mpf(x) - self.offset) + _mpf(self.center) - self.k_shift
        else:
            xd = self.scale * _mpf(x) + _mpf(self.center)
        return int(mpmath.floor(xd))

    def exact(self, k: int):
        if k not in self._exact_cache:
            self._exact_cache[k] = self._exact(k)
        return self._exact_cache[k]

    def _exact(self, k: int):
        d = self.d
        if not 0 <= k <= d:
            return mpmath.mpf(0)
        if self.family == "eulerian":
            return _mpf(Fraction(eulerian_explicit(d, k), factorial(d)))
        if self.family == "descent":
            return _mpf(Fraction(descent_explicit(d, self.n, k), factorial(d) * self.n ** d))
        if self.family == "refined":
            return _mpf(Fraction(refined_explicit(d + 1, k, d - self.j + 1), factorial(d)))
        return self.scale ** (self.r + 1) * _mpf(bspline_derivative_explicit(d, self.r, k))

    def exact_at_real(self, x: Fraction):
        # bspline only: B_d^(r) at the argument itself, no flooring
        arg = Fraction(mpmath.nstr(self.scale * _mpf(x) + _mpf(self.center), 40))
        return self.scale ** (self.r + 1) * _mpf(bspline_derivative_explicit(self.d, self.r, arg))

    def approx(self, x):
        d = self.d
        if self.family == "eulerian":
            return _eulerian_approx(d, x)
        if self.family == "descent":
            return _eulerian_approx(d, x + _descent_shift(d, self.n, self.centering))
        if self.family == "refined":
            return _refined_approx(d, self.approx_j, x, self.herm)
        return _bspline_gaussian_approx(self.r, x, self.herm)


def _scan_one(family: str, params: dict, d: int, grid: GridSpec) -> tuple[float, float]:
    with mpmath.workprec(PREC_BITS):
        fam = _Family(family, d, params)
        worst, where = mpmath.mpf(-1), None
        lo, hi = _mpf(grid.x_lo), _mpf(grid.x_hi)
        if grid.mode == "lattice":
            pairs = ((fam.x_of_k(k), k) for k in fam.k_range())
            pairs = [(x, k) for x, k in pairs if lo <= x <= hi]
            points = [(x, fam.exact(k)) for x, k in pairs]
        elif family == "bspline":
            points = [(_mpf(x), fam.exact_at_real(x)) for x in grid.floor_points()]
        else:
            points = [(_mpf(x), fam.exact(fam.k_of_x(x))) for x in grid.floor_points()]
        if not points:
            raise DomainError(f"no lattice point of d={d} inside [{grid.x_lo}, {grid.x_hi}]")
        for x, exact in points:
            err = abs(exact - fam.approx(x))
            if err > worst:
                worst, where = err, x
        return float(worst), float(where)


def error_scan(family: str, params: dict | None, d_list, grid: GridSpec | None = None,
               workers: int = 1) -> ErrorScan:
    """Sup over the window of |exact standardized value - approximation|, per d.

    ``params`` may hold ``n`` (descent), ``j`` (refined), ``r`` (bspline
    derivative order) and ``centering``. ``approx_j`` scores refined data
    of order ``j`` against the Hermite approximation of another order.
    """
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}; expected one of {FAMILIES}")
    params = dict(params or {})
    grid = grid or GridSpec()
    d_list = [int(d) for d in d_list]
    if any(a >= b for a, b in zip(d_list, d_list[1:])):
        raise DomainError("d_list must be strictly increasing")
    if workers > 1 and len(d_list) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan_one, family, params, d, grid) for d in d_list]
            results = [f.result() for f in futures]
    else:
        results = [_scan_one(family, params, d, grid) for d in d_list]
    return ErrorScan(
        family, params,
        tuple((d, e) for d, (e, _) in zip(d_list, results)),
        tuple(x for _, x in results),
    )


def fit_convergence_order(scan: ErrorScan) -> SlopeFit:
    """Least-squares line through (log d, log sup_error)."""
    ds, es = scan.d_values, scan.errors
    if len(ds) < 3:
        raise DomainError(f"need at least 3 samples, got {len(ds)}")
    if any(e <= 0 for e in es):
        raise DomainError("every sup error must be > 0 to take logs")
    X, Y = np.log(np.array(ds, float)), np.log(np.array(es, float))
    slope, intercept = np.polyfit(X, Y, 1)
    resid = Y - (slope * X + intercept)
    ss_tot = float(np.sum((Y - Y.mean()) ** 2))
    ss_res = float(np.sum(resid ** 2))
    # constant data: the fitted line is exact
    r2 = 1.0 if ss_tot <= 1e-300 else 1.0 - ss_res / ss_tot
    return SlopeFit(float(slope), float(intercept), min(max(r2, 0.0), 1.0), (ds[0], ds[-1]))


def band_verdict(family: str, fit: SlopeFit) -> bool:
    lo, hi, r2_min = BANDS[family]
    if lo is not None and fit.slope < lo:
        return False
    if hi is not None and fit.slope > hi:
        return False
    if r2_min is not None and fit.r_squared < r2_min:
        return False
    return True


def descent_peak(d: int, n: int) -> tuple[float, float]:
    """(standardized x of the largest D(d, n, k), lattice step 1/sigma)."""
    with mpmath.workprec(PREC_BITS):
        fam = _Family("descent", d, {"n": n})
        k = max(fam.k_range(), key=lambda k: (descent_explicit(d, n, k), -k))
        return float(fam.x_of_k(k)), float(1 / fam.scale)


def eulerian_lattice_mass(d: int) -> float:
    """Sum of eulerian_approx over every integer lattice point k = 0..d+1."""
    with mpmath.workprec(PREC_BITS):
        fam = _Family("eulerian", d, {})
        return float(mpmath.fsum(_eulerian_approx(d, fam.x_of_k(k)) for k in range(d + 2)))


# ---- sinc envelope ----

@dataclass(frozen=True)
class SincBoundReport:
    k: int
    c_k: float
    c_k_argmax: int  # d attaining the maximum
    c_k_scanned_to: int  # last d inspected before the stopping rule fired
    samples_checked: int
    violations: tuple[tuple[int, float, float, float], ...]  # (d, x, lhs, bound)

    @property
    def ok(self) -> bool:
        return not self.violations


def sinc_constant(k: int, patience: int = 50) -> tuple[float, int, int]:
    """max over d >= k+2 of d^((k+2)/2) / pi^(d-k-2).

    Scans d upward in log space and stops once the term has decreased
    ``patience`` times in a row. Returns (c_k, argmax d, last d scanned).
    """
    def log_term(d):
        return (k + 2) / 2 * math.log(d) - (d - k - 2) * math.log(math.pi)

    d = k + 2
    best, best_d = log_term(d), d
    prev, streak = best, 0
    while streak < patience:
        d += 1
        cur = log_term(d)
        streak = streak + 1 if cur < prev else 0
        if cur > best:
            best, best_d = cur, d
        prev = cur
    # evaluate at the maximiser directly: exp(log) loses the exact value 16 at k = 2
    with mpmath.workprec(PREC_BITS):
        c_k = float(_sinc_constant_term(k, best_d))
    return c_k, best_d, d


def _sinc_constant_term(k: int, d: int):
    return mpmath.mpf(d) ** (mpmath.mpf(k + 2) / 2) / mpmath.pi ** (d - k - 2)


def _np_sinc(t: np.ndarray) -> np.ndarray:
    # numpy.sinc is the normalized sin(pi t)/(pi t); this is sin(t)/t
    out = np.ones_like(t)
    nz = t != 0
    out[nz] = np.sin(t[nz]) / t[nz]
    return out


def sinc_envelope(k: int, c_k: float, x: np.ndarray) -> np.ndarray:
    """G_k(x) = 1{|x| > 1} c_k / (pi^2 x^2) + pi^k |x|^k exp(-x^2)."""
    x = np.asarray(x, float)
    ax = np.abs(x)
    tail = np.zeros_like(ax)
    far = ax > 1
    tail[far] = c_k / (math.pi ** 2 * ax[far] ** 2)
    return tail + math.pi ** k * ax ** k * np.exp(-ax ** 2)


def _bound_holds_precisely(k: int, c_d: int, d: int, x: float) -> tuple[bool, float, float]:
    """Recheck one sample in mpmath with enough digits to resolve exp(-x^2).

    At d = k + 2 and odd x the sinc term equals the c_k tail exactly, so
    the margin is only pi^k |x|^k exp(-x^2), far below double rounding.
    """
    digits = 40 + int(x * x / math.log(10))
    with mpmath.workdps(digits):
        X = mpmath.mpf(x)
        c_k = _sinc_constant_term(k, c_d)
        t = mpmath.pi * X / mpmath.sqrt(d)
        sinc_t = mpmath.mpf(1) if t == 0 else mpmath.sin(t) / t
        lhs = mpmath.pi ** k * abs(X) ** k * abs(sinc_t) ** d
        bound = mpmath.pi ** k * abs(X) ** k * mpmath.exp(-X * X)
        if abs(X) > 1:
            bound += c_k / (mpmath.pi ** 2 * X * X)
        return lhs <= bound, float(lhs), float(bound)


def sinc_bound_check(k: int, d_list, xs) -> SincBoundReport:
    """Check pi^k |x|^k |sinc(pi x / sqrt(d))|^d <= G_k(x) on every (d, x) sample.

    The grid is screened in double precision; any sample that fails the
    screen is decided by an mpmath recomputation.
    """
    d_list = [int(d) for d in d_list]
    if any(d < k + 2 for d in d_list):
        raise DomainError(f"every d must be >= k + 2 = {k + 2}")
    c_k, argmax, scanned = sinc_constant(k)
    xs = np.asarray(xs, float)
    bound = sinc_envelope(k, c_k, xs)
    weight = math.pi ** k * np.abs(xs) ** k
    violations = []
    for d in d_list:
        lhs = weight * np.abs(_np_sinc(math.pi * xs / math.sqrt(d))) ** d
        for i in np.nonzero(lhs > bound * (1 - 1e-12))[0]:
            ok, lhs_hp, bound_hp = _bound_holds_precisely(k, argmax, d, float(xs[i]))
            if not ok:
                violations.append((d, float(xs[i]), lhs_hp, bound_hp))
    return SincBoundReport(k, c_k, argmax, scanned, len(d_list) * len(xs), tuple(violations))
