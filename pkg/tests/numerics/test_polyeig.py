"""Tests for matrix polynomial eigenvalues."""

import numpy as np
import pytest

from hother.perispec.core.exceptions import InvalidInputError, SingularPencilError
from hother.perispec.numerics.polyeig import (
    PolyEigenResult,
    companion_pencil,
    evaluate_polynomial,
    is_identically_singular,
    poly_eigenvalues,
)


class TestEvaluatePolynomial:
    """Tests for evaluate_polynomial()."""

    def test_horner(self) -> None:
        """Coefficients are ordered by increasing power."""
        blocks = [np.array([[1.0 + 0j]]), np.array([[2.0 + 0j]]), np.array([[3.0 + 0j]])]

        assert evaluate_polynomial(blocks, 2.0)[0, 0] == pytest.approx(1 + 4 + 12)

    def test_companion_pencil_shape(self) -> None:
        """A degree-2 polynomial of 2x2 blocks linearizes to a 4x4 pencil."""
        blocks = [np.eye(2, dtype=np.complex128)] * 3

        c, e = companion_pencil(blocks)

        assert c.shape == e.shape == (4, 4)


class TestPolyEigenvalues:
    """Tests for poly_eigenvalues()."""

    def test_linear_scalar(self) -> None:
        """z - 0.5 has its single zero at 0.5."""
        result = poly_eigenvalues([[[-0.5]], [[1.0]]])

        assert len(result.finite) == 1
        value, multiplicity = result.finite[0]
        assert value == pytest.approx(0.5)
        assert multiplicity == 1
        assert result.infinite_count == 0

    def test_quadratic_sorted(self) -> None:
        """z^2 - 1 has zeros -1 and 1, sorted by real part."""
        result = poly_eigenvalues([[[-1.0]], [[0.0]], [[1.0]]])

        values = [value for value, _ in result.finite]
        assert values == [pytest.approx(-1.0), pytest.approx(1.0)]
        assert result.degree == 2

    def test_jordan_block_clusters(self) -> None:
        """The perturbed double eigenvalue of a Jordan block merges into one point."""
        jordan = np.array([[0.0, 1.0], [0.0, 0.0]])

        result = poly_eigenvalues([-jordan, np.eye(2)])

        assert len(result.finite) == 1
        assert result.finite[0][1] == 2
        assert abs(result.finite[0][0]) < 1e-6

    def test_singular_leading_block(self) -> None:
        """A degree deficit shows up as eigenvalues at infinity."""
        result = poly_eigenvalues([np.eye(2), np.diag([1.0, 0.0])])

        assert result.degree == 1
        assert result.finite[0][0] == pytest.approx(-1.0)
        assert result.infinite_count == 1

    def test_trailing_zero_blocks_dropped(self) -> None:
        """Zero leading coefficients do not raise the degree."""
        result = poly_eigenvalues([[[-2.0]], [[1.0]], [[0.0]]])

        assert result.degree == 1
        assert result.infinite_count == 0

    def test_constant_nonsingular(self) -> None:
        """A constant invertible polynomial has no eigenvalues."""
        result = poly_eigenvalues([np.eye(2)])

        assert result == PolyEigenResult(finite=(), infinite_count=0)

    def test_identically_singular(self) -> None:
        """A shared zero row makes det P vanish identically."""
        blocks = [np.diag([1.0, 0.0]), np.diag([1.0, 0.0])]

        assert is_identically_singular([b.astype(np.complex128) for b in blocks])
        with pytest.raises(SingularPencilError):
            poly_eigenvalues(blocks)

    def test_mismatched_blocks(self) -> None:
        """Blocks of different sizes are rejected."""
        with pytest.raises(InvalidInputError):
            poly_eigenvalues([np.eye(2), np.eye(3)])


class TestPolyEigenResult:
    """Tests for the PolyEigenResult helpers."""

    def test_multiplicity_at(self) -> None:
        """Multiplicity is summed over points near the query."""
        result = PolyEigenResult(finite=((0.5 + 0j, 2), (2.0 + 0j, 1)), infinite_count=0)

        assert result.multiplicity_at(0.5) == 2
        assert result.multiplicity_at(1.0) == 0

    def test_nearest(self) -> None:
        """The closest eigenvalue is returned; None without eigenvalues."""
        result = PolyEigenResult(finite=((0.5 + 0j, 1), (2.0 + 0j, 1)), infinite_count=0)

        assert result.nearest(1.5) == 2.0
        assert PolyEigenResult(finite=(), infinite_count=0).nearest(0) is None
