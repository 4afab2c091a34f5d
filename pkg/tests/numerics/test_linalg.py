"""Tests for dense matrix helpers."""

import numpy as np
import pytest

from hother.perispec.core.exceptions import InvalidInputError
from hother.perispec.numerics.linalg import (
    as_complex_matrix,
    as_square_blocks,
    complex_from_pair,
    complex_to_pair,
    mat_rank,
    matrix_from_json,
    matrix_to_json,
    smallest_singular_value,
)


class TestAsComplexMatrix:
    """Tests for as_complex_matrix()."""

    def test_real_input_becomes_complex(self) -> None:
        """Real lists are promoted to complex128."""
        matrix = as_complex_matrix([[1.0, 2.0], [3.0, 4.0]])

        assert matrix.dtype == np.complex128
        assert matrix[1, 0] == 3.0

    @pytest.mark.parametrize(
        "data",
        [
            [1.0, 2.0],
            [[]],
            [[float("nan")]],
            [[float("inf"), 0.0]],
            "abc",
        ],
    )
    def test_rejects_bad_input(self, data: object) -> None:
        """Non-2-D, empty, non-finite and non-numeric input is rejected."""
        with pytest.raises(InvalidInputError):
            as_complex_matrix(data)  # type: ignore[arg-type]

    def test_name_appears_in_reason(self) -> None:
        """The label is used in the error message."""
        with pytest.raises(InvalidInputError, match="T must be"):
            as_complex_matrix([1.0], name="T")


class TestAsSquareBlocks:
    """Tests for as_square_blocks()."""

    def test_empty_list(self) -> None:
        """At least one block is required."""
        with pytest.raises(InvalidInputError, match="at least one"):
            as_square_blocks([], name="coefficient")

    def test_non_square(self) -> None:
        """Blocks must be square."""
        with pytest.raises(InvalidInputError, match="square"):
            as_square_blocks([[[1.0, 2.0]]], name="coefficient")

    def test_mismatched_sizes(self) -> None:
        """All blocks share one size."""
        with pytest.raises(InvalidInputError, match="expected"):
            as_square_blocks([np.eye(2), np.eye(3)], name="coefficient")


class TestMatRank:
    """Tests for mat_rank()."""

    def test_full_rank(self) -> None:
        """The identity has full rank."""
        assert mat_rank(np.eye(3, dtype=np.complex128)) == 3

    def test_zero_matrix(self) -> None:
        """The zero matrix has rank 0."""
        assert mat_rank(np.zeros((2, 2), dtype=np.complex128)) == 0

    def test_relative_cutoff(self) -> None:
        """Singular values far below the largest are dropped."""
        assert mat_rank(np.diag([1.0, 1e-12]).astype(np.complex128)) == 1

    def test_absolute_scale(self) -> None:
        """A small matrix is rank 0 against a large reference scale."""
        matrix = np.diag([1e-12, 1e-12]).astype(np.complex128)

        assert mat_rank(matrix) == 2
        assert mat_rank(matrix, scale=1.0) == 0

    def test_smallest_singular_value(self) -> None:
        """The smallest singular value of a diagonal matrix is its smallest entry."""
        assert smallest_singular_value(np.diag([3.0, 0.5]).astype(np.complex128)) == pytest.approx(0.5)


class TestJsonForm:
    """Tests for the [re, im] encoding."""

    def test_complex_to_pair(self) -> None:
        """Complex numbers become two floats."""
        assert complex_to_pair(1.5 - 2j) == [1.5, -2.0]

    @pytest.mark.parametrize(
        ("data", "expected"),
        [
            ([1, 2], 1 + 2j),
            ([0.5, -0.25], 0.5 - 0.25j),
            (3, 3 + 0j),
            (2.5, 2.5 + 0j),
        ],
    )
    def test_complex_from_pair(self, data: object, expected: complex) -> None:
        """Pairs and bare numbers are accepted."""
        assert complex_from_pair(data) == expected

    @pytest.mark.parametrize("data", [True, [1, 2, 3], "1+2j", [None, 1], {"re": 1}])
    def test_complex_from_pair_rejects(self, data: object) -> None:
        """Booleans, strings and malformed pairs are rejected."""
        with pytest.raises(InvalidInputError):
            complex_from_pair(data)

    def test_matrix_json(self) -> None:
        """Matrices encode as rows of pairs and decode back."""
        matrix = np.array([[1 + 1j, 0], [0, -2j]])

        encoded = matrix_to_json(matrix)

        assert encoded[0][0] == [1.0, 1.0]
        assert encoded[1][1] == [0.0, -2.0]
        np.testing.assert_array_equal(matrix_from_json(encoded, name="T"), matrix)

    @pytest.mark.parametrize("data", [[], [[[1, 0]], [[1, 0], [2, 0]]], [[[1, 0]], "row"], "T"])
    def test_matrix_from_json_rejects(self, data: object) -> None:
        """Empty, ragged or flat data is rejected."""
        with pytest.raises(InvalidInputError):
            matrix_from_json(data, name="T")
