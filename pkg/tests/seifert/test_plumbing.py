"""Tests for star-shaped plumbing graphs."""

from fractions import Fraction

import pytest

from hother.perispec.core.exceptions import InvalidInputError
from hother.perispec.seifert import PlumbingGraph, SeifertData, negative_continued_fraction, plumbing_graph


class TestNegativeContinuedFraction:
    """Tests for negative_continued_fraction()."""

    @pytest.mark.parametrize(
        ("p", "q", "expected"),
        [
            (5, 4, [2, 2, 2, 2]),
            (7, 1, [7]),
            (3, 2, [2, 2]),
            (7, 3, [3, 2, 2]),
        ],
    )
    def test_known(self, p: int, q: int, expected: list[int]) -> None:
        """Known expansions."""
        assert negative_continued_fraction(p, q) == expected

    @pytest.mark.parametrize(("p", "q"), [(3, 3), (2, 0), (2, 5)])
    def test_out_of_range(self, p: int, q: int) -> None:
        """The expansion needs 0 < q < p."""
        with pytest.raises(InvalidInputError):
            negative_continued_fraction(p, q)


class TestPlumbingGraph:
    """Tests for PlumbingGraph."""

    def test_e8(self) -> None:
        """Sigma(2,3,5) bounds the E8 plumbing."""
        graph = plumbing_graph(SeifertData.of(2, 3, 5))

        assert graph.size == 8
        assert graph.signature() == -8
        assert graph.is_even()
        assert graph.is_negative_definite()
        assert abs(graph.determinant()) == 1
        assert graph.wu_class() == (0,) * 8
        assert graph.canonical_square() == 8

    def test_two_three_seven(self) -> None:
        """Sigma(2,3,7): central -1 with legs -2, -3, -7."""
        graph = plumbing_graph(SeifertData.of(2, 3, 7))

        assert graph.weights == (-1, -2, -3, -7)
        assert graph.parents == (-1, 0, 0, 0)
        assert graph.signature() == -4
        assert not graph.is_even()
        assert graph.wu_class() == (0, 1, 1, 1)
        assert graph.wu_square() == -12
        assert graph.canonical_square() == 0

    def test_intersection_matrix(self) -> None:
        """Weights on the diagonal, ones along edges."""
        graph = PlumbingGraph(weights=(-1, -2, -3), parents=(-1, 0, 1))

        assert graph.intersection_matrix().tolist() == [[-1, 1, 0], [1, -2, 1], [0, 1, -3]]

    def test_solve(self) -> None:
        """The tree elimination solves M x = rhs exactly."""
        graph = plumbing_graph(SeifertData.of(2, 3, 11))
        matrix = graph.intersection_matrix().tolist()
        rhs = [Fraction(v + 1) for v in range(graph.size)]

        x = graph.solve(rhs)

        for row, value in zip(matrix, rhs, strict=True):
            assert sum((int(m) * xi for m, xi in zip(row, x, strict=True)), Fraction(0)) == value

    def test_solve_length_checked(self) -> None:
        """The right-hand side needs one entry per vertex."""
        graph = PlumbingGraph(weights=(-2,), parents=(-1,))

        with pytest.raises(InvalidInputError):
            graph.solve([1, 2])

    def test_canonical_class_is_adjunctive(self) -> None:
        """K . E_v = -E_v^2 - 2 at every vertex."""
        graph = plumbing_graph(SeifertData.of(2, 5, 7))
        matrix = graph.intersection_matrix().tolist()
        k = graph.canonical_class()

        for v, row in enumerate(matrix):
            assert sum((int(m) * kv for m, kv in zip(row, k, strict=True)), Fraction(0)) == -2 - graph.weights[v]

    @pytest.mark.parametrize(
        ("weights", "parents"),
        [((), ()), ((-2, -2), (-1,)), ((-2, -2), (0, 0)), ((-2, -2), (-1, 1))],
    )
    def test_invalid_structure(self, weights: tuple[int, ...], parents: tuple[int, ...]) -> None:
        """Parents must precede children and the root has no parent."""
        with pytest.raises(InvalidInputError):
            PlumbingGraph(weights=weights, parents=parents)

    def test_zero_pivot(self) -> None:
        """A degenerate form is reported."""
        graph = PlumbingGraph(weights=(0,), parents=(-1,))

        with pytest.raises(InvalidInputError, match="zero pivot"):
            _ = graph.pivots

    @pytest.mark.parametrize("multiplicities", [(2, 3, 5), (2, 3, 7), (3, 4, 5), (2, 5, 7), (2, 3, 5, 7)])
    def test_unimodular(self, multiplicities: tuple[int, ...]) -> None:
        """Every homology sphere plumbing is negative definite and unimodular."""
        graph = plumbing_graph(SeifertData(multiplicities=multiplicities))

        assert graph.is_negative_definite()
        assert abs(graph.determinant()) == 1
        assert graph.signature() == -graph.size
