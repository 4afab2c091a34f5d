"""Star-shaped plumbing graphs of Seifert homology spheres.

All linear algebra is exact. The intersection matrix of a tree is eliminated
leaf by leaf: a vertex's pivot is its weight minus the reciprocal pivots of
its children. The pivots give the determinant and, by Sylvester's law of
inertia, the signature; the same elimination solves linear systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING

import numpy as np

from hother.perispec.core.exceptions import InvalidInputError, SeifertNormalizationError, WuClassError
from hother.perispec.numerics.rational import as_integer

if TYPE_CHECKING:
    from collections.abc import Sequence

    import numpy.typing as npt

    from hother.perispec.seifert.data import SeifertData

ROOT = -1


def negative_continued_fraction(p: int, q: int) -> list[int]:
    """Entries ``c_1, c_2, ... >= 2`` with ``p/q = c_1 - 1/(c_2 - 1/(...))``.

    Args:
        p: Numerator, ``p > q``.
        q: Denominator, ``q >= 1``.

    Example:
        >>> negative_continued_fraction(5, 4)
        [2, 2, 2, 2]
    """
    if not 0 < q < p:
        raise InvalidInputError(reason=f"negative continued fraction needs 0 < q < p, got {p}/{q}")
    entries: list[int] = []
    while q > 0:
        c = -(-p // q)
        entries.append(c)
        p, q = q, c * q - p
    return entries


@dataclass(frozen=True, eq=False)
class PlumbingGraph:
    """A weighted tree of spheres; vertex 0 is the root.

    Vertices are listed so that every parent precedes its children.

    Attributes:
        weights: Self-intersection of each vertex.
        parents: Parent index of each vertex, ``-1`` for the root.
    """

    weights: tuple[int, ...]
    parents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.weights or len(self.weights) != len(self.parents):
            raise InvalidInputError(reason="a plumbing graph needs one parent entry per vertex")
        if self.parents[0] != ROOT or any(not 0 <= p < v for v, p in enumerate(self.parents) if v > 0):
            raise InvalidInputError(reason="plumbing vertices must list every parent before its children")

    @property
    def size(self) -> int:
        """Number of vertices, the rank of the intersection form."""
        return len(self.weights)

    def edges(self) -> list[tuple[int, int]]:
        """``(parent, child)`` pairs."""
        return [(p, v) for v, p in enumerate(self.parents) if p != ROOT]

    def intersection_matrix(self) -> npt.NDArray[np.int64]:
        """Symmetric integer matrix: weights on the diagonal, 1 per edge."""
        matrix = np.diag(np.array(self.weights, dtype=np.int64))
        for p, v in self.edges():
            matrix[p, v] = matrix[v, p] = 1
        return matrix

    @cached_property
    def pivots(self) -> tuple[Fraction, ...]:
        """Leaf-to-root elimination pivots.

        Raises:
            InvalidInputError: If a pivot vanishes (the form is degenerate there).
        """
        pivots = [Fraction(w) for w in self.weights]
        for v in range(self.size - 1, 0, -1):
            if pivots[v] == 0:
                raise InvalidInputError(reason=f"zero pivot at plumbing vertex {v}")
            pivots[self.parents[v]] -= 1 / pivots[v]
        if pivots[0] == 0:
            raise InvalidInputError(reason="zero pivot at the plumbing root")
        return tuple(pivots)

    def determinant(self) -> int:
        """Determinant of the intersection matrix."""
        det = Fraction(1)
        for pivot in self.pivots:
            det *= pivot
        return as_integer(det, quantity="plumbing determinant")

    def signature(self) -> int:
        """Positive minus negative eigenvalue count."""
        return sum(1 if pivot > 0 else -1 for pivot in self.pivots)

    def is_negative_definite(self) -> bool:
        """All pivots negative."""
        return all(pivot < 0 for pivot in self.pivots)

    def is_even(self) -> bool:
        """Every self-intersection even."""
        return all(w % 2 == 0 for w in self.weights)

    def solve(self, rhs: Sequence[Fraction | int]) -> list[Fraction]:
        """Solve ``M x = rhs`` exactly by the tree elimination."""
        if len(rhs) != self.size:
            raise InvalidInputError(reason=f"right-hand side has {len(rhs)} entries for {self.size} vertices")
        pivots = self.pivots
        y = [Fraction(value) for value in rhs]
        for v in range(self.size - 1, 0, -1):
            y[self.parents[v]] -= y[v] / pivots[v]
        x = [Fraction(0)] * self.size
        x[0] = y[0] / pivots[0]
        for v in range(1, self.size):
            x[v] = (y[v] - x[self.parents[v]]) / pivots[v]
        return x

    def canonical_class(self) -> list[Fraction]:
        """Coefficients of the class ``K`` with ``K . E_v = -E_v . E_v - 2`` for every vertex."""
        return self.solve([-2 - w for w in self.weights])

    def canonical_square(self) -> Fraction:
        """``K^2 + s`` with ``s`` the number of vertices."""
        k = self.canonical_class()
        square = sum((kv * (-2 - w) for kv, w in zip(k, self.weights, strict=True)), Fraction(0))
        return square + self.size

    def wu_class(self) -> tuple[int, ...]:
        """The characteristic 0/1 vector ``s`` with ``s . x = x . x (mod 2)`` for every vertex ``x``.

        Solved by Gaussian elimination over GF(2) on bit-packed rows.

        Raises:
            WuClassError: If the system is singular mod 2.
        """
        n = self.size
        neighbours: list[list[int]] = [[] for _ in range(n)]
        for p, v in self.edges():
            neighbours[p].append(v)
            neighbours[v].append(p)
        # Row v: coefficient bits in positions 0..n-1, right-hand side in bit n
        rows: list[int] = []
        for v, w in enumerate(self.weights):
            row = (w % 2) << v
            for u in neighbours[v]:
                row |= 1 << u
            rows.append(row | ((w % 2) << n))
        for column in range(n):
            pivot = next((r for r in range(column, n) if rows[r] >> column & 1), None)
            if pivot is None:
                raise WuClassError(size=n)
            rows[column], rows[pivot] = rows[pivot], rows[column]
            for r in range(n):
                if r != column and rows[r] >> column & 1:
                    rows[r] ^= rows[column]
        return tuple(rows[v] >> n & 1 for v in range(n))

    def wu_square(self) -> int:
        """``w . w`` for the Wu class ``w``."""
        members = self.wu_class()
        square = sum(w for w, bit in zip(self.weights, members, strict=True) if bit)
        square += 2 * sum(1 for p, v in self.edges() if members[p] and members[v])
        return square


def plumbing_graph(s: SeifertData) -> PlumbingGraph:
    """The negative-definite star plumbing of ``Sigma(a_1, ..., a_n)``.

    The root carries ``-b`` and each fiber contributes a leg of weights
    ``-c_1, -c_2, ...`` from the negative continued fraction of ``a_k / w_k``.

    Raises:
        DegenerateSeifertError: For degenerate data.
        SeifertNormalizationError: If the result is not unimodular.

    Example:
        >>> graph = plumbing_graph(SeifertData.of(2, 3, 5))
        >>> graph.size, graph.signature(), graph.is_even()
        (8, -8, True)
    """
    invariants = s.normalized()
    weights = [-invariants.b]
    parents = [ROOT]
    for a, w in invariants.pairs:
        previous = 0
        for c in negative_continued_fraction(a, w):
            weights.append(-c)
            parents.append(previous)
            previous = len(weights) - 1
    graph = PlumbingGraph(weights=tuple(weights), parents=tuple(parents))
    if abs(graph.determinant()) != 1:
        raise SeifertNormalizationError(multiplicities=s.multiplicities)
    return graph
