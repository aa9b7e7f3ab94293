"""
Eulerian, refined Eulerian and descent numbers, each by an explicit
alternating sum and by its recurrence.

Index conventions (kept explicit because they differ between families):

* ``A(d, k)``  counts permutations of S_d with k - 1 descents, k = 0..d.
* ``R(d, k, j)`` counts permutations of S_d with k descents ending in j.
* ``D(d, n, k)`` counts indexed permutations with k descents, k = 0..d.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import DomainError, VerificationError
from .numeric import binomial

__all__ = [
    "EulerianTable", "RefinedTable", "DescentTable",
    "eulerian_explicit", "eulerian_recurrence_table",
    "refined_explicit", "refined_recurrence_table",
    "descent_explicit", "descent_recurrence_table",
]


def _pow(base: int, exp: int) -> int:
    # 0**0 == 1 in Python already; spelled out because the formulas depend on it
    return 1 if exp == 0 else base ** exp


@dataclass(frozen=True)
class EulerianTable:
    d: int
    values: tuple[int, ...]  # values[k] = A(d, k)

    @property
    def descent_histogram(self) -> tuple[int, ...]:
        """Counts indexed by the number of descents m = k - 1."""
        if self.d == 0:
            return (1,)
        return self.values[1:]


@dataclass(frozen=True)
class RefinedTable:
    d: int
    values: dict  # (k, j) -> R(d, k, j), 0 <= k <= d-1, 1 <= j <= d

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.values.get(key, 0)

    def row_for_descents(self, k: int) -> list[int]:
        return [self[k, j] for j in range(1, self.d + 1)]

    def total(self) -> int:
        return sum(self.values.values())


@dataclass(frozen=True)
class DescentTable:
    d: int
    n: int
    values: tuple[int, ...]  # values[k] = D(d, n, k)


def eulerian_explicit(d: int, k: int) -> int:
    if d < 0 or not 0 <= k <= d:
        raise DomainError(f"A(d, k) needs d >= 0 and 0 <= k <= d, got d={d}, k={k}")
    return sum(binomial(d + 1, i) * (-1) ** i * _pow(k - i, d) for i in range(k + 1))


def eulerian_recurrence_table(d: int) -> EulerianTable:
    if d < 0:
        raise DomainError(f"order must be >= 0, got {d}")
    row = [1]
    for m in range(1, d + 1):
        prev = row + [0, 0]
        new = [0] * (m + 1)
        # A(m, k+1) = (k+1) A(m-1, k+1) + (m-k) A(m-1, k); A(m, 0) = 0
        for k in range(m):
            new[k + 1] = (k + 1) * prev[k + 1] + (m - k) * prev[k]
        row = new
    return EulerianTable(d, tuple(row))


def refined_explicit(d: int, k: int, j: int) -> int:
    if d < 1 or not 0 <= k <= d - 1 or not 1 <= j <= d:
        raise DomainError(f"R(d, k, j) needs d >= 1, 0 <= k < d, 1 <= j <= d; got {d}, {k}, {j}")
    return sum(
        binomial(d, i) * (-1) ** i * _pow(k - i, d - j) * _pow(k - i + 1, j - 1)
        for i in range(k + 1)
    )


def _refined_step_first(prev: RefinedTable, k: int, m: int) -> int:
    # R(d+1, k, m) = (k+1) R(d, k, m-1) + (d-k) R(d, k-1, m-1), valid for m >= 2
    d = prev.d
    return (k + 1) * prev[k, m - 1] + (d - k) * prev[k - 1, m - 1]


def _refined_step_second(prev: RefinedTable, k: int, m: int) -> int:
    # R(d+1, k, m) = k R(d, k, m) + (d-k+1) R(d, k-1, m), valid for m <= d
    d = prev.d
    return k * prev[k, m] + (d - k + 1) * prev[k - 1, m]


def refined_recurrence_table(d: int, verify: bool = False) -> RefinedTable:
    """Build R(d, ., .) from R(1, 0, 1) = 1.

    The first recurrence fills every last element m >= 2; it never reaches
    m = 1, so that column comes from the second recurrence. With
    ``verify=True`` every entry the second recurrence covers (m <= d) is
    recomputed with it and compared.
    """
    if d < 1:
        raise DomainError(f"order must be >= 1, got {d}")
    table = RefinedTable(1, {(0, 1): 1})
    for size in range(1, d):
        new = {}
        for k in range(size + 1):
            for m in range(1, size + 2):
                if m >= 2:
                    v = _refined_step_first(table, k, m)
                else:
                    v = _refined_step_second(table, k, m)
                if verify and m <= size:
                    w = _refined_step_second(table, k, m)
                    if v != w:
                        raise VerificationError(
                            f"refined recurrences disagree at d={size + 1}, k={k}, j={m}: {v} != {w}")
                new[k, m] = v
        table = RefinedTable(size + 1, new)
    return table


def descent_explicit(d: int, n: int, k: int) -> int:
    if d < 0 or n < 1 or not 0 <= k <= d:
        raise DomainError(f"D(d, n, k) needs d >= 0, n >= 1, 0 <= k <= d; got {d}, {n}, {k}")
    return sum(binomial(d + 1, i) * (-1) ** i * _pow(n * (k - i) + 1, d) for i in range(k + 1))


def descent_recurrence_table(d: int, n: int) -> DescentTable:
    if d < 0 or n < 1:
        raise DomainError(f"need d >= 0 and n >= 1, got d={d}, n={n}")
    row = [1]
    for m in range(1, d + 1):
        prev = row + [0]
        new = []
        for k in range(m + 1):
            left = prev[k - 1] if k >= 1 else 0
            new.append((n * k + 1) * prev[k] + (n * (m - k) + (n - 1)) * left)
        row = new
    return DescentTable(d, n, tuple(row))


def row_sum_targets(d: int, n: int = 1) -> dict:
    """Expected totals: d! for A and R, n^d d! for D."""
    return {"eulerian": factorial(d), "refined": factorial(d), "descent": n ** d * factorial(d)}
