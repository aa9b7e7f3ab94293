from math import factorial

import pytest
from hypothesis import given, strategies as st

from eulerspline.combinat import (
    descent_explicit, descent_recurrence_table, eulerian_explicit, eulerian_recurrence_table,
    refined_explicit, refined_recurrence_table, row_sum_targets,
)
from eulerspline.errors import DomainError

orders = st.integers(min_value=0, max_value=30)


def test_eulerian_small_rows():
    assert eulerian_recurrence_table(3).values == (0, 1, 4, 1)
    assert eulerian_recurrence_table(4).values == (0, 1, 11, 11, 1)
    assert eulerian_recurrence_table(0).values == (1,)
    assert eulerian_recurrence_table(4).descent_histogram == (1, 11, 11, 1)


@given(orders)
def test_eulerian_explicit_matches_recurrence(d):
    row = eulerian_recurrence_table(d).values
    assert [eulerian_explicit(d, k) for k in range(d + 1)] == list(row)
    assert sum(row) == factorial(d)


@given(st.integers(min_value=1, max_value=30))
def test_eulerian_symmetry(d):
    row = eulerian_recurrence_table(d).values
    assert all(row[k] == row[d + 1 - k] for k in range(1, d + 1))


def test_refined_small_table():
    t = refined_recurrence_table(3, verify=True)
    # S_3 with k descents ending in j: 123 | 132 213 312 231 | 321
    assert t[0, 3] == 1
    assert t[1, 2] == 2 and t[1, 1] == 1 and t[1, 3] == 1
    assert t[2, 1] == 1
    assert t.total() == 6


@given(st.integers(min_value=1, max_value=14))
def test_refined_explicit_matches_recurrence(d):
    t = refined_recurrence_table(d, verify=True)
    for k in range(d):
        assert t.row_for_descents(k) == [refined_explicit(d, k, j) for j in range(1, d + 1)]
        assert sum(t.row_for_descents(k)) == eulerian_explicit(d, k + 1)


def test_descent_example_row():
    assert descent_recurrence_table(2, 2).values == (1, 6, 1)


@given(st.integers(min_value=0, max_value=20), st.integers(min_value=1, max_value=6))
def test_descent_explicit_matches_recurrence(d, n):
    row = descent_recurrence_table(d, n).values
    assert [descent_explicit(d, n, k) for k in range(d + 1)] == list(row)
    assert sum(row) == n ** d * factorial(d)


@given(st.integers(min_value=1, max_value=20))
def test_descent_n1_reduces_to_eulerian(d):
    assert [descent_explicit(d, 1, k) for k in range(d)] == [eulerian_explicit(d, k + 1) for k in range(d)]


def test_row_sum_targets():
    assert row_sum_targets(4, 3)["descent"] == 3 ** 4 * 24


@pytest.mark.parametrize("call", [
    lambda: eulerian_explicit(-1, 0),
    lambda: eulerian_explicit(3, 4),
    lambda: refined_explicit(3, 0, 0),
    lambda: descent_explicit(3, 0, 1),
    lambda: refined_recurrence_table(0),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_large_values_stay_exact():
    v = eulerian_explicit(512, 256)
    assert v > 10 ** 1000
    assert v == eulerian_explicit(512, 257)
