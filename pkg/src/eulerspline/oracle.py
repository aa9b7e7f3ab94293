"""
Brute-force ground truth: walk every permutation of 1..d and count descents.

Indexed permutations (the D(d, n, k) family) are not enumerated here; their
descent statistic is not pinned down well enough to brute-force.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .errors import DomainError

__all__ = [
    "MAX_ORDER", "DescentHistogram", "enumerate_descents",
    "LastLetterAudit", "audit_last_letter_relation",
]

MAX_ORDER = 9


@dataclass(frozen=True)
class DescentHistogram:
    d: int
    counts: tuple[int, ...]  # counts[m] = #permutations with m descents
    refined_counts: dict = field(default_factory=dict)  # (m, last) -> count

    def eulerian(self, k: int) -> int:
        """A(d, k) in the k - 1 descents convention."""
        if k == 0:
            return 0
        m = k - 1
        return self.counts[m] if 0 <= m < len(self.counts) else 0

    def refined(self, k: int, j: int) -> int:
        return self.refined_counts.get((k, j), 0)


@lru_cache(maxsize=None)
def enumerate_descents(d: int) -> DescentHistogram:
    """Histogram of descents over S_d, iterated in lexicographic order."""
    if not 1 <= d <= MAX_ORDER:
        raise DomainError(f"enumeration is capped at 1 <= d <= {MAX_ORDER}, got {d}")
    counts = [0] * d
    refined: Counter = Counter()
    for perm in permutations(range(1, d + 1)):
        m = sum(1 for a, b in zip(perm, perm[1:]) if a > b)
        counts[m] += 1
        refined[m, perm[-1]] += 1
    return DescentHistogram(d, tuple(counts), dict(sorted(refined.items())))


@dataclass(frozen=True)
class LastLetterAudit:
    d_max: int
    # (d, k, refined R(d+1, k, d+1), literal A(d+1, k), shifted A(d, k+1))
    rows: tuple[tuple[int, int, int, int, int], ...]

    @property
    def literal_holds(self) -> bool:
        return all(r == lit for _, _, r, lit, _ in self.rows)

    @property
    def shifted_holds(self) -> bool:
        return all(r == sh for _, _, r, _, sh in self.rows)

    def literal_failures(self) -> list[tuple]:
        return [row for row in self.rows if row[2] != row[3]]


def audit_last_letter_relation(d_max: int) -> LastLetterAudit:
    """Compare R(d+1, k, d+1) with A(d+1, k) and with A(d, k+1) by enumeration."""
    if not 1 <= d_max <= MAX_ORDER - 1:
        raise DomainError(f"d_max must be in 1..{MAX_ORDER - 1}, got {d_max}")
    rows = []
    for d in range(1, d_max + 1):
        small, big = enumerate_descents(d), enumerate_descents(d + 1)
        for k in range(d + 1):
            rows.append((d, k, big.refined(k, d + 1), big.eulerian(k), small.eulerian(k + 1)))
    return LastLetterAudit(d_max, tuple(rows))
