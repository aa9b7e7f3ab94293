import mpmath
import pytest

from eulerspline.errors import DomainError
from eulerspline.hermite import (
    hermite_eval, hermite_prob, hermite_rodrigues, physicists_from_prob, physicists_sum,
)
from eulerspline.numeric import Polynomial
from eulerspline.verify import gaussian_derivative_fd_error


def test_low_degrees():
    he = hermite_prob(4)
    assert he[2] == Polynomial([-1, 0, 1])
    assert he[3] == Polynomial([0, -3, 0, 1])
    assert he[4] == Polynomial([3, 0, -6, 0, 1])


def test_routes_agree_to_degree_40():
    assert list(hermite_prob(40, verify=True).polys) == hermite_rodrigues(40)


def test_physicists_cross_check():
    he = hermite_prob(15)
    for n in range(16):
        assert physicists_sum(n) == physicists_from_prob(he[n], n)
    assert physicists_sum(2) == Polynomial([-2, 0, 4])


def test_eval_keeps_type():
    he = hermite_prob(3)
    assert hermite_eval(he, 3, 2.0) == 2.0
    v = hermite_eval(he, 3, mpmath.mpf(2))
    assert isinstance(v, mpmath.mpf) and v == 2


def test_orthogonality_numerically():
    he = hermite_prob(5)
    for m in range(6):
        for n in range(6):
            val = mpmath.quad(lambda x: hermite_eval(he, m, x) * hermite_eval(he, n, x)
                              * mpmath.exp(-x * x / 2), [-mpmath.inf, mpmath.inf])
            expect = mpmath.sqrt(2 * mpmath.pi) * mpmath.factorial(n) if m == n else 0
            assert abs(val - expect) < 1e-10


@pytest.mark.parametrize("i", range(7))
def test_finite_difference_gaussian_derivatives(i):
    err, scale = gaussian_derivative_fd_error(hermite_prob(6), i)
    assert err <= 1e-5 * scale


def test_domain():
    with pytest.raises(DomainError):
        hermite_prob(-1)
    with pytest.raises(DomainError):
        hermite_eval(hermite_prob(2), 3, 0.0)
