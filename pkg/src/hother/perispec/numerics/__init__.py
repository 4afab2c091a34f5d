"""Shared numeric substrate: dense linear algebra, contour quadrature, pencils, rationals."""

from hother.perispec.numerics.contour import CircleContour, contour_integrate, converged_integrate, winding_number
from hother.perispec.numerics.linalg import (
    ComplexMatrix,
    ComplexVector,
    JsonComplex,
    as_complex_matrix,
    mat_rank,
    matrix_from_json,
    matrix_to_json,
    smallest_singular_value,
)
from hother.perispec.numerics.polyeig import PolyEigenResult, evaluate_polynomial, poly_eigenvalues
from hother.perispec.numerics.rational import (
    ExactRational,
    JsonRational,
    as_integer,
    rational_from_json,
    rational_to_json,
)
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE, ToleranceConfig

__all__ = [
    "DEFAULT_TOLERANCE",
    "CircleContour",
    "ComplexMatrix",
    "ComplexVector",
    "ExactRational",
    "JsonComplex",
    "JsonRational",
    "PolyEigenResult",
    "ToleranceConfig",
    "as_complex_matrix",
    "as_integer",
    "contour_integrate",
    "converged_integrate",
    "evaluate_polynomial",
    "mat_rank",
    "matrix_from_json",
    "matrix_to_json",
    "poly_eigenvalues",
    "rational_from_json",
    "rational_to_json",
    "smallest_singular_value",
    "winding_number",
]
