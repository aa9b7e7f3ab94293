"""
Exact arithmetic substrate: binomials, dense rational polynomials and
piecewise polynomials with rational breakpoints.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``;
both are arbitrary precision and ``Fraction`` is always kept in lowest terms
with a positive denominator.

>>> box = unit_box()
>>> hat = pw_convolve_unit_box(box)
>>> pw_eval(hat, Fraction(1))
Fraction(1, 1)
>>> pw_eval(pw_convolve_unit_box(hat), Fraction(3, 2))
Fraction(3, 4)
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "binomial", "Polynomial", "poly_mul", "poly_derivative", "poly_compose_shift",
    "PiecewisePolynomial", "unit_box", "pw_convolve_unit_box", "pw_eval", "pw_integral",
]


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are trimmed,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coeff=1) -> Polynomial:
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Polynomial(0)"
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Polynomial(" + " + ".join(terms) + ")"

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = Polynomial([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return poly_derivative(self)

    def antiderivative(self) -> Polynomial:
        """Antiderivative vanishing at 0."""
        return Polynomial([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def shift(self, c) -> Polynomial:
        return poly_compose_shift(self, c)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial()
    out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j, cb in enumerate(b.coeffs):
            out[i + j] += ca * cb
    return Polynomial(out)


def poly_derivative(a: Polynomial) -> Polynomial:
    return Polynomial(i * c for i, c in enumerate(a.coeffs) if i)


def poly_compose_shift(a: Polynomial, c) -> Polynomial:
    """Return the polynomial x -> a(x + c), exactly (Horner in x + c)."""
    c = _as_fraction(c)
    if c == 0:
        return a
    out: list[Fraction] = []
    for coef in reversed(a.coeffs):
        # out <- out * (x + c) + coef
        nxt = [Fraction(0)] * (len(out) + 1)
        for i, v in enumerate(out):
            nxt[i + 1] += v
            nxt[i] += v * c
        nxt[0] += coef
        out = nxt
    return Polynomial(out)


@dataclass(frozen=True)
class PiecewisePolynomial:
    """Piecewise polynomial on ``[breakpoints[0], breakpoints[-1]]``.

    ``pieces[i]`` (in the global variable x) is active on
    ``[breakpoints[i], breakpoints[i + 1])``; the function is zero elsewhere,
    so evaluation is right-continuous.
    """

    breakpoints: tuple[Fraction, ...]
    pieces: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.breakpoints) != len(self.pieces) + 1:
            raise ValueError("need exactly one piece per breakpoint interval")
        if any(b >= c for b, c in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError("breakpoints must be strictly increasing")

    @classmethod
    def zero(cls) -> PiecewisePolynomial:
        return cls((Fraction(0),), ())

    @property
    def support(self) -> tuple[Fraction, Fraction]:
        return self.breakpoints[0], self.breakpoints[-1]

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.pieces)

    def piece_index(self, x) -> int | None:
        """Index of the piece active at x (right-continuous), or None outside."""
        i = bisect.bisect_right(self.breakpoints, x) - 1
        if i < 0 or i >= len(self.pieces):
            return None
        return i

    def __call__(self, x) -> Fraction:
        return pw_eval(self, x)


def unit_box() -> PiecewisePolynomial:
    """Indicator of [0, 1)."""
    return PiecewisePolynomial((Fraction(0), Fraction(1)), (Polynomial([1]),))


def pw_eval(f: PiecewisePolynomial, x) -> Fraction:
    i = f.piece_index(_as_fraction(x))
    if i is None:
        return Fraction(0)
    return f.pieces[i](_as_fraction(x))


def pw_integral(f: PiecewisePolynomial) -> Fraction:
    total = Fraction(0)
    for a, b, p in zip(f.breakpoints, f.breakpoints[1:], f.pieces):
        P = p.antiderivative()
        total += P(b) - P(a)
    return total


def _cumulative(f: PiecewisePolynomial) -> tuple[list[Polynomial], Fraction]:
    """Antiderivative F of f with F = 0 left of the support, piece by piece."""
    out = []
    acc = Fraction(0)
    for a, b, p in zip(f.breakpoints, f.breakpoints[1:], f.pieces):
        P = p.antiderivative()
        out.append(P - P(a) + acc)
        acc += P(b) - P(a)
    return out, acc


def _cumulative_at(bps: Sequence[Fraction], cum: list[Polynomial], total: Fraction, x) -> Polynomial:
    # the piece of F valid on [x, next breakpoint)
    i = bisect.bisect_right(bps, x) - 1
    if i < 0:
        return Polynomial()
    if i >= len(cum):
        return Polynomial([total])
    return cum[i]


def pw_convolve_unit_box(f: PiecewisePolynomial) -> PiecewisePolynomial:
    """(B_1 * f)(x) = integral of f over [x - 1, x], computed exactly.

    With F the antiderivative of f, the result is F(x) - F(x - 1); its
    breakpoints are the union of f's breakpoints and their shifts by one.
    """
    if f.is_zero():
        return PiecewisePolynomial.zero()
    bps = f.breakpoints
    cum, total = _cumulative(f)
    new_bps = sorted(set(bps) | {b + 1 for b in bps})
    pieces = []
    for left in new_bps[:-1]:
        upper = _cumulative_at(bps, cum, total, left)
        lower = _cumulative_at(bps, cum, total, left - 1).shift(-1)
        pieces.append(upper - lower)
    return PiecewisePolynomial(tuple(new_bps), tuple(pieces))
