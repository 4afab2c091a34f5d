"""Dense complex matrices: validation, numerical rank, JSON form."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Annotated, Any, cast

import numpy as np
import numpy.typing as npt
from pydantic import PlainSerializer, PlainValidator
from scipy import linalg

from hother.perispec.core.exceptions import InvalidInputError
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE, ToleranceConfig

type ComplexMatrix = npt.NDArray[np.complex128]
type ComplexVector = npt.NDArray[np.complex128]

_PAIR_LENGTH = 2
_MATRIX_NDIM = 2


def as_complex_matrix(data: npt.ArrayLike, *, name: str = "matrix") -> ComplexMatrix:
    """Convert ``data`` to a finite, non-empty 2-D complex array.

    Args:
        data: Anything ``numpy.asarray`` understands.
        name: Label used in error messages.

    Raises:
        InvalidInputError: For non-numeric, empty, non-2-D or non-finite input.
    """
    try:
        matrix = np.array(data, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(reason=f"{name} is not numeric: {exc}") from exc
    if matrix.ndim != _MATRIX_NDIM or 0 in matrix.shape:
        raise InvalidInputError(reason=f"{name} must be a non-empty 2-D array, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise InvalidInputError(reason=f"{name} has non-finite entries")
    return matrix


def as_square_blocks(blocks: list[npt.ArrayLike], *, name: str) -> list[ComplexMatrix]:
    """Validate a list of square matrices sharing one size.

    Raises:
        InvalidInputError: If the list is empty or the shapes disagree.
    """
    if not blocks:
        raise InvalidInputError(reason=f"{name} needs at least one coefficient block")
    matrices = [as_complex_matrix(block, name=f"{name}[{i}]") for i, block in enumerate(blocks)]
    shape = matrices[0].shape
    if shape[0] != shape[1]:
        raise InvalidInputError(reason=f"{name} blocks must be square, got {shape}")
    for i, matrix in enumerate(matrices):
        if matrix.shape != shape:
            raise InvalidInputError(reason=f"{name}[{i}] has shape {matrix.shape}, expected {shape}")
    return matrices


def mat_rank(matrix: ComplexMatrix, tol: ToleranceConfig | None = None, *, scale: float | None = None) -> int:
    """Numerical rank by singular values.

    A singular value counts when it exceeds ``rank_threshold * scale``. The
    scale defaults to the largest singular value; pass the magnitude of the
    quantity the matrix was computed from when round-off in a small result
    must not be mistaken for rank.

    Args:
        matrix: Matrix to inspect.
        tol: Tolerances; library defaults when omitted.
        scale: Absolute reference magnitude.

    Returns:
        The rank; 0 for the zero matrix.
    """
    tol = tol or DEFAULT_TOLERANCE
    if matrix.size == 0:
        return 0
    singular_values = linalg.svdvals(matrix)
    reference = float(singular_values[0]) if scale is None else scale
    if reference == 0.0:
        return 0
    return int(np.count_nonzero(singular_values > tol.rank_threshold * reference))


def smallest_singular_value(matrix: ComplexMatrix) -> float:
    """Return the smallest singular value of a square matrix."""
    return float(linalg.svdvals(matrix)[-1])


def spectral_norm(matrix: ComplexMatrix) -> float:
    """Return the largest singular value."""
    return float(linalg.svdvals(matrix)[0])


def complex_to_pair(value: complex) -> list[float]:
    """Encode a complex number as ``[re, im]``."""
    return [float(value.real), float(value.imag)]


def complex_from_pair(data: Any) -> complex:
    """Decode ``[re, im]`` (or a bare real or complex number).

    Raises:
        InvalidInputError: If the value is not a number or a pair of numbers.
    """
    if isinstance(data, bool):
        raise InvalidInputError(reason=f"expected a number or [re, im] pair, got {data!r}")
    if isinstance(data, int | float | complex):
        return complex(data)
    if isinstance(data, Sequence) and not isinstance(data, str):
        items = cast("Sequence[Any]", data)
        if len(items) != _PAIR_LENGTH:
            raise InvalidInputError(reason=f"expected a number or [re, im] pair, got {data!r}")
        re, im = items
        if isinstance(re, int | float) and isinstance(im, int | float) and not isinstance(re, bool):
            return complex(float(re), float(im))
    raise InvalidInputError(reason=f"expected a number or [re, im] pair, got {data!r}")


def matrix_to_json(matrix: ComplexMatrix) -> list[list[list[float]]]:
    """Encode a matrix as nested rows of ``[re, im]`` pairs."""
    return [[complex_to_pair(complex(entry)) for entry in row] for row in matrix]


def matrix_from_json(data: Any, *, name: str) -> ComplexMatrix:
    """Decode nested rows of ``[re, im]`` pairs into a matrix.

    Raises:
        InvalidInputError: On any structural problem.
    """
    if not isinstance(data, list) or not data:
        raise InvalidInputError(reason=f"{name} must be a non-empty list of rows")
    rows: list[list[complex]] = []
    for row in cast("list[Any]", data):
        if not isinstance(row, list):
            raise InvalidInputError(reason=f"{name} rows must be lists")
        rows.append([complex_from_pair(entry) for entry in cast("list[Any]", row)])
    if len({len(row) for row in rows}) != 1:
        raise InvalidInputError(reason=f"{name} rows have different lengths")
    return as_complex_matrix(rows, name=name)


# Complex numbers inside pydantic models serialize as [re, im]
JsonComplex = Annotated[
    complex,
    PlainValidator(complex_from_pair),
    PlainSerializer(complex_to_pair, return_type=list[float]),
]
