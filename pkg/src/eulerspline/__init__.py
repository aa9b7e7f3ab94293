"""
Eulerian, refined Eulerian and descent numbers computed exactly by three
independent routes (explicit sums, recurrences, cardinal B-spline
bridges), plus empirical convergence orders of their Gaussian and
Hermite-series approximations.
"""

__version__ = "0.1.0"

from .errors import DomainError, VerificationError
from .numeric import Polynomial, PiecewisePolynomial, binomial
from .combinat import (
    eulerian_explicit, eulerian_recurrence_table,
    refined_explicit, refined_recurrence_table,
    descent_explicit, descent_recurrence_table,
)
from .bspline import (
    bspline_build, bspline_eval_explicit, bspline_eval_recurrence,
    bridge_eulerian, bridge_descent, bridge_refined_coeff, refined_via_derivative_sum,
    fourier_check,
)
from .hermite import hermite_prob, hermite_rodrigues
from .asymptotics import error_scan, fit_convergence_order, GridSpec, sinc_bound_check

__all__ = [
    "__version__", "DomainError", "VerificationError",
    "Polynomial", "PiecewisePolynomial", "binomial",
    "eulerian_explicit", "eulerian_recurrence_table",
    "refined_explicit", "refined_recurrence_table",
    "descent_explicit", "descent_recurrence_table",
    "bspline_build", "bspline_eval_explicit", "bspline_eval_recurrence",
    "bridge_eulerian", "bridge_descent", "bridge_refined_coeff", "refined_via_derivative_sum",
    "fourier_check", "hermite_prob", "hermite_rodrigues",
    "error_scan", "fit_convergence_order", "GridSpec", "sinc_bound_check",
]
