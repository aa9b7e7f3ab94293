"""
Cardinal B-splines B_d on the knots 0..d.

Three independent ways to get values: the truncated-power sum, the
two-term recurrence, and repeated exact convolution with the unit box.
The bridge functions turn spline values back into the combinatorial
numbers of :mod:`eulerspline.combinat`.
"""

from __future__ import annotations

import bisect
import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from .errors import DomainError, VerificationError
from .numeric import (
    PiecewisePolynomial, Polynomial, binomial, pw_convolve_unit_box, pw_eval, unit_box,
)

__all__ = [
    "BSpline", "LambdaPolynomial",
    "bspline_eval_explicit", "bspline_eval_recurrence", "bspline_build",
    "bspline_derivative_eval", "bspline_derivatives", "bspline_derivative_explicit", "bspline_piece_derivative", "fourier_check", "sinc",
    "bridge_eulerian", "bridge_descent", "bridge_refined_coeff", "lambda_polynomial",
    "refined_via_derivative_sum", "refined_derivative_sums", "derivative_sum_value",
    "derivative_sum_coefficients", "short_form_derivative_sum_coefficients",
]

_SIDES = ("right", "left")


def _check_side(side: str) -> None:
    if side not in _SIDES:
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")


def _truncated_power(y: Fraction, m: int, side: str = "right") -> Fraction:
    # (y)_+^m; for m = 0 the step is right-continuous (y >= 0) or left-continuous (y > 0)
    if m == 0:
        on = y >= 0 if side == "right" else y > 0
        return Fraction(1 if on else 0)
    return y ** m if y > 0 else Fraction(0)


def _is_integer(x: Fraction) -> bool:
    return Fraction(x).denominator == 1


@dataclass(frozen=True)
class BSpline:
    d: int
    representation: PiecewisePolynomial

    @property
    def support(self) -> tuple[Fraction, Fraction]:
        return Fraction(0), Fraction(self.d)

    def __call__(self, x) -> Fraction:
        return pw_eval(self.representation, x)


def bspline_eval_explicit(d: int, x, side: str = "right") -> Fraction:
    """B_d(x) = 1/(d-1)! * sum_i (-1)^i C(d, i) (x - i)_+^(d-1)."""
    if d < 1:
        raise DomainError(f"B-spline order must be >= 1, got {d}")
    _check_side(side)
    return _explicit_derivative(d, 0, Fraction(x), side)


def _explicit_derivative(d: int, r: int, x: Fraction, side: str) -> Fraction:
    m = d - 1 - r
    total = Fraction(0)
    for i in range(d + 1):
        t = _truncated_power(x - i, m, side)
        if t:
            total += (-1) ** i * binomial(d, i) * t
    return total / factorial(m)


def bspline_derivative_explicit(d: int, r: int, x, side: str = "right") -> Fraction:
    """r-th derivative of B_d by differentiating the truncated-power sum.

    1/(d-1-r)! * sum_i (-1)^i C(d, i) (x - i)_+^(d-1-r); for r = d - 1 the
    steps follow ``side``.
    """
    if d < 1 or not 0 <= r <= d - 1:
        raise DomainError(f"need d >= 1 and 0 <= r <= d - 1, got d={d}, r={r}")
    _check_side(side)
    return _explicit_derivative(d, r, Fraction(x), side)


def _recurrence_triangle(d: int, x: Fraction, side: str) -> list[list[Fraction]]:
    """rows[m][t] = B_m(x - t) for m = 1..d and t = 0..d-m (rows[0] unused)."""
    if side == "right":
        row = [Fraction(1 if 0 <= x - t < 1 else 0) for t in range(d)]
    else:
        row = [Fraction(1 if 0 < x - t <= 1 else 0) for t in range(d)]
    rows = [[], row]
    for m in range(2, d + 1):
        row = [
            ((x - t) * row[t] + (m - (x - t)) * row[t + 1]) / (m - 1)
            for t in range(d - m + 1)
        ]
        rows.append(row)
    return rows


def bspline_eval_recurrence(d: int, x, side: str = "right") -> Fraction:
    """B_d(x) from B_m(y) = y/(m-1) B_{m-1}(y) + (m-y)/(m-1) B_{m-1}(y-1).

    Runs the recurrence as a triangle over the shifted arguments x - t so
    each lower-order value is computed once.
    """
    if d < 1:
        raise DomainError(f"B-spline order must be >= 1, got {d}")
    _check_side(side)
    return _recurrence_triangle(d, Fraction(x), side)[d][0]


@lru_cache(maxsize=64)
def bspline_build(d: int) -> BSpline:
    """B_d as an exact piecewise polynomial, by (d-1)-fold box convolution."""
    if d < 1:
        raise DomainError(f"B-spline order must be >= 1, got {d}")
    f = unit_box()
    for _ in range(d - 1):
        f = pw_convolve_unit_box(f)
    return BSpline(d, f)


def bspline_derivative_eval(d: int, r: int, x, side: str | None = None) -> Fraction:
    """r-th derivative of B_d at x via B_d' (x) = B_{d-1}(x) - B_{d-1}(x-1).

    Applied r times this gives sum_i (-1)^i C(r, i) B_{d-r}(x - i). For
    r <= d - 2 the derivative is continuous and ``side`` is irrelevant. For
    r = d - 1 it jumps at the knots, so evaluating there needs an explicit
    one-sided limit (``side='left'`` or ``'right'``).
    """
    if d < 1 or r < 0:
        raise DomainError(f"need d >= 1 and r >= 0, got d={d}, r={r}")
    if r > d - 1:
        raise DomainError(f"B_{d} has no pointwise derivative of order {r}")
    x = Fraction(x)
    if side is None:
        if r == d - 1 and _is_integer(x) and 0 <= x <= d:
            raise DomainError(f"derivative {r} of B_{d} is discontinuous at knot {x}; pass side=")
        side = "right"
    _check_side(side)
    return _difference_rule(_recurrence_triangle(d, x, side), d, r)


def _difference_rule(rows, d: int, r: int) -> Fraction:
    lower = rows[d - r]
    return sum(((-1) ** i * binomial(r, i) * lower[i] for i in range(r + 1)), Fraction(0))


def bspline_derivatives(d: int, x, side: str = "right") -> list[Fraction]:
    """[B_d^(r)(x) for r = 0..d-1] by the difference rule, from one recurrence triangle."""
    if d < 1:
        raise DomainError(f"B-spline order must be >= 1, got {d}")
    _check_side(side)
    rows = _recurrence_triangle(d, Fraction(x), side)
    return [_difference_rule(rows, d, r) for r in range(d)]


def bspline_piece_derivative(spline: BSpline, r: int, x, side: str = "right") -> Fraction:
    """r-th derivative from the pieces of the built spline (independent route)."""
    _check_side(side)
    f = spline.representation
    x = Fraction(x)
    if side == "left":
        # piece i covers (b_i, b_{i+1}] for left limits
        i = bisect.bisect_left(f.breakpoints, x) - 1
    else:
        i = bisect.bisect_right(f.breakpoints, x) - 1
    if i < 0 or i >= len(f.pieces):
        return Fraction(0)
    p = f.pieces[i]
    for _ in range(r):
        p = p.derivative()
    return p(x)


def sinc(t: float) -> float:
    return 1.0 if t == 0 else math.sin(t) / t


@lru_cache(maxsize=32)
def _float_local_pieces(d: int) -> tuple[np.ndarray, ...]:
    # piece on [i, i+1] rewritten in s = x - i, then rounded to float
    sp = bspline_build(d).representation
    out = []
    for left, p in zip(sp.breakpoints, sp.pieces):
        local = p.shift(left)
        out.append(np.array([float(c) for c in local.coeffs] or [0.0]))
    return tuple(out)


def fourier_check(d: int, omega: float, nodes: int = 20) -> float:
    """Residual of the Fourier transform of B_d against sinc^d(omega/2).

    sinc^d(omega/2) is the transform of the spline centred at 0, so the
    quadrature of B_d(t) exp(-i omega t) over [0, d] is multiplied by the
    phase exp(i omega d / 2) before comparing. Each knot interval uses
    ``nodes``-point Gauss-Legendre.
    """
    if d < 1:
        raise DomainError(f"B-spline order must be >= 1, got {d}")
    s, w = np.polynomial.legendre.leggauss(nodes)
    s = 0.5 * (s + 1.0)
    w = 0.5 * w
    total = 0j
    for left, coeffs in enumerate(_float_local_pieces(d)):
        vals = np.polynomial.polynomial.polyval(s, coeffs)
        total += np.sum(w * vals * np.exp(-1j * omega * (s + left)))
    centred = total * cmath.exp(1j * omega * d / 2)
    return abs(centred - sinc(omega / 2) ** d)


def bridge_eulerian(d: int, k: int) -> int:
    """A(d, k) = d! B_{d+1}(k)."""
    if d < 0 or not 0 <= k <= d:
        raise DomainError(f"need 0 <= k <= d, got d={d}, k={k}")
    v = factorial(d) * bspline_eval_explicit(d + 1, k)
    if v.denominator != 1:
        raise VerificationError(f"d! B_{d + 1}({k}) = {v} is not an integer")
    return v.numerator


def bridge_descent(d: int, n: int, k: int) -> int:
    """D(d, n, k) = d! n^d B_{d+1}(k + 1/n)."""
    if d < 0 or n < 1 or not 0 <= k <= d:
        raise DomainError(f"need d >= 0, n >= 1, 0 <= k <= d; got {d}, {n}, {k}")
    # left limit: only matters for n = 1, d = 0, where k + 1 is a knot of the step B_1
    v = factorial(d) * n ** d * bspline_eval_explicit(d + 1, k + Fraction(1, n), side="left")
    if v.denominator != 1:
        raise VerificationError(f"d! n^d B_{d + 1}({k} + 1/{n}) = {v} is not an integer")
    return v.numerator


@dataclass(frozen=True)
class LambdaPolynomial:
    """(lambda+1)^d B_{d+1}(k + 1/(lambda+1)) expanded in powers of lambda."""

    k: int
    d: int
    coefficients: tuple[Fraction, ...]


def lambda_polynomial(d: int, k: int) -> LambdaPolynomial:
    """Expand (lambda+1)^d B_{d+1}(k + 1/(lambda+1)) exactly.

    For lambda >= 0 the argument lies in (k, k+1], so only the truncated
    powers with i <= k are active, and (lambda+1)^d (k - i + 1/(lambda+1))^d
    = ((k-i)(lambda+1) + 1)^d. Each term is built in u = lambda + 1 and
    shifted back to lambda.
    """
    if d < 0 or not 0 <= k <= d:
        raise DomainError(f"need 0 <= k <= d, got d={d}, k={k}")
    in_u = [0] * (d + 1)
    for i in range(k + 1):
        w = (-1) ** i * binomial(d + 1, i)
        for m in range(d + 1):
            in_u[m] += w * binomial(d, m) * (k - i) ** m
    total = Polynomial(in_u).shift(1) * Fraction(1, factorial(d))
    coeffs = tuple(total.coeffs) + (Fraction(0),) * (d + 1 - len(total.coeffs))
    return LambdaPolynomial(k, d, coeffs)


def bridge_refined_coeff(d: int, k: int) -> list[int]:
    """[R(d+1, k, d-j+1) for j = 0..d] from the lambda-coefficients.

    R(d+1, k, d-j+1) = d! [lambda^j] / C(d, j).
    """
    lp = lambda_polynomial(d, k)
    out = []
    for j, c in enumerate(lp.coefficients):
        v = c * factorial(d) / binomial(d, j)
        if v.denominator != 1:
            raise VerificationError(f"lambda-coefficient {j} at d={d}, k={k} gives non-integer {v}")
        out.append(v.numerator)
    return out


def _lah(i: int, m: int) -> int:
    # unsigned Lah number: ways to split i labelled items into m ordered lists
    if i == m == 0:
        return 1
    if m < 1 or m > i:
        return 0
    return binomial(i - 1, m - 1) * factorial(i) // factorial(m)


def derivative_sum_coefficients(d: int, j: int) -> list[Fraction]:
    """Weights w_m with R(d+1, k, d-j+1) = d! sum_m w_m B_{d+1}^(m)(k+1).

    Comes from the j-th lambda-derivative at 0 of
    d! (lambda+1)^d B_{d+1}(k + 1/(lambda+1)). Leibniz splits it into
    derivatives of (lambda+1)^d and of h(lambda) = B_{d+1}(k + 1/(lambda+1)).
    By Faa di Bruno, h^(i)(0) = (-1)^i sum_m L(i, m) B^(m)(k+1), where the
    L(i, m) are Lah numbers.
    """
    if d < 0 or not 0 <= j <= d:
        raise DomainError(f"need 0 <= j <= d, got d={d}, j={j}")
    w = [Fraction(0)] * (j + 1)
    for i in range(j + 1):
        outer = binomial(j, i) * Fraction(factorial(d - j), factorial(d - j + i)) * (-1) ** i
        for m in range(i + 1):
            w[m] += outer * _lah(i, m)
    return w


def short_form_derivative_sum_coefficients(d: int, j: int) -> list[Fraction]:
    """The closed form (-1)^m / C(d-j+m, m).

    It keeps only the top Faa di Bruno term of each derivative, so it agrees
    with :func:`derivative_sum_coefficients` for j <= 1 only.
    """
    if d < 0 or not 0 <= j <= d:
        raise DomainError(f"need 0 <= j <= d, got d={d}, j={j}")
    return [Fraction((-1) ** m, binomial(d - j + m, m)) for m in range(j + 1)]


def _left_derivatives_at(d: int, k: int, j: int) -> list[Fraction]:
    # the argument k + 1/(lambda+1) tends to k + 1 from below as lambda -> 0+,
    # so take left limits; only order d (which jumps at knots) is affected
    return bspline_derivatives(d + 1, k + 1, side="left")[: j + 1]


def derivative_sum_value(d: int, k: int, j: int, coefficients=None) -> Fraction:
    """d! sum_m w_m B_{d+1}^(m)(k+1) as an exact rational, without an integrality check."""
    if d < 0 or not 0 <= k <= d or not 0 <= j <= d:
        raise DomainError(f"need 0 <= k, j <= d; got d={d}, k={k}, j={j}")
    weights = (coefficients or derivative_sum_coefficients)(d, j)
    derivs = _left_derivatives_at(d, k, j)
    return factorial(d) * sum((w * b for w, b in zip(weights, derivs)), Fraction(0))


def refined_via_derivative_sum(d: int, k: int, j: int, coefficients=None) -> int:
    """R(d+1, k, d-j+1) as a weighted sum of derivatives of B_{d+1} at k + 1.

    ``coefficients`` defaults to :func:`derivative_sum_coefficients`. The
    short form gives wrong values from j = 2 on; a non-integer result raises.
    """
    v = derivative_sum_value(d, k, j, coefficients)
    if v.denominator != 1:
        raise VerificationError(f"derivative sum at d={d}, k={k}, j={j} gives non-integer {v}")
    return v.numerator


def refined_derivative_sums(d: int, k: int) -> list[int]:
    """[refined_via_derivative_sum(d, k, j) for j = 0..d], sharing the derivatives."""
    if d < 0 or not 0 <= k <= d:
        raise DomainError(f"need 0 <= k <= d; got d={d}, k={k}")
    derivs = _left_derivatives_at(d, k, d)
    out = []
    for j in range(d + 1):
        weights = derivative_sum_coefficients(d, j)
        v = factorial(d) * sum((w * b for w, b in zip(weights, derivs)), Fraction(0))
        if v.denominator != 1:
            raise VerificationError(f"derivative sum at d={d}, k={k}, j={j} gives non-integer {v}")
        out.append(v.numerator)
    return out
