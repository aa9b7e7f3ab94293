"""
Probabilists' Hermite polynomials He_n (weight exp(-x^2/2)).

Two constructions are kept: the three-term recurrence and the
Rodrigues-style recursion q_{n+1} = x q_n - q_n'. The physicists' sum is
available only as a cross-check via H_n(x) = 2^(n/2) He_n(sqrt(2) x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath

from .errors import DomainError, VerificationError
from .numeric import Polynomial

__all__ = [
    "HermiteSequence", "hermite_prob", "hermite_rodrigues", "hermite_eval",
    "physicists_sum", "physicists_from_prob",
]

_X = Polynomial([0, 1])


@dataclass(frozen=True)
class HermiteSequence:
    N: int
    polys: tuple[Polynomial, ...]

    def __getitem__(self, i: int) -> Polynomial:
        return self.polys[i]


def hermite_rodrigues(N: int) -> list[Polynomial]:
    # (-1)^n e^{x^2/2} D^n e^{-x^2/2} = q_n with q_{n+1} = x q_n - q_n'
    q = [Polynomial([1])]
    for _ in range(N):
        q.append(_X * q[-1] - q[-1].derivative())
    return q


def hermite_prob(N: int, verify: bool = False) -> HermiteSequence:
    """He_0..He_N from He_{n+1} = x He_n - n He_{n-1}."""
    if N < 0:
        raise DomainError(f"max degree must be >= 0, got {N}")
    polys = [Polynomial([1]), _X][: N + 1]
    for n in range(1, N):
        polys.append(_X * polys[n] - n * polys[n - 1])
    if verify:
        for i, (a, b) in enumerate(zip(polys, hermite_rodrigues(N))):
            if a != b:
                raise VerificationError(f"He_{i}: recurrence {a} != Rodrigues {b}")
    return HermiteSequence(N, tuple(polys))


def hermite_eval(seq: HermiteSequence, i: int, x):
    """Horner evaluation of He_i; float in, float out (mpmath mpf is kept as mpf)."""
    if not 0 <= i <= seq.N:
        raise DomainError(f"degree {i} not in 0..{seq.N}")
    if isinstance(x, mpmath.mpf):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in seq.polys[i].coeffs]
    else:
        x = float(x)
        coeffs = [float(c) for c in seq.polys[i].coeffs]
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def physicists_sum(n: int) -> Polynomial:
    """sum_k (-1)^k n! (2x)^(n-2k) / (k! (n-2k)!)."""
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = Fraction((-1) ** k * factorial(n) * 2 ** (n - 2 * k),
                                     factorial(k) * factorial(n - 2 * k))
    return Polynomial(coeffs)


def physicists_from_prob(he: Polynomial, n: int) -> Polynomial:
    """2^(n/2) He_n(sqrt(2) x); rational because He_n has only powers of n's parity."""
    coeffs = []
    for m, c in enumerate(he.coeffs):
        if c and (n + m) % 2:
            raise ValueError("He_n must have only powers with the parity of n")
        coeffs.append(c * 2 ** ((n + m) // 2) if c else Fraction(0))
    return Polynomial(coeffs)
