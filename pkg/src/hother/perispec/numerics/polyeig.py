"""Zeros of det P(mu) for matrix polynomials, by companion linearization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy import linalg
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from hother.perispec.core.exceptions import SingularPencilError
from hother.perispec.numerics.linalg import ComplexMatrix, as_square_blocks, mat_rank
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE, ToleranceConfig

if TYPE_CHECKING:
    import numpy.typing as npt

# Two fixed generic points; det P vanishing at both means det P vanishes identically
_PROBE_POINTS = (0.6180339887 + 0.3141592654j, -0.7071067812 + 0.5772156649j)


@dataclass(frozen=True, slots=True)
class PolyEigenResult:
    """Eigenvalues of a matrix polynomial.

    Attributes:
        finite: Distinct finite eigenvalues with algebraic multiplicities,
            sorted by real then imaginary part.
        infinite_count: Number of eigenvalues at infinity (degree deficit of
            ``det P`` against ``n * deg P``).
    """

    finite: tuple[tuple[complex, int], ...]
    infinite_count: int

    @property
    def degree(self) -> int:
        """Degree of ``det P``: total multiplicity of the finite eigenvalues."""
        return sum(multiplicity for _, multiplicity in self.finite)

    def multiplicity_at(self, point: complex, tol: ToleranceConfig | None = None) -> int:
        """Total multiplicity of finite eigenvalues clustered at ``point``; 0 if none."""
        tol = tol or DEFAULT_TOLERANCE
        radius = tol.cluster_radius * max(1.0, abs(point))
        return sum(multiplicity for value, multiplicity in self.finite if abs(value - point) <= radius)

    def nearest(self, point: complex) -> complex | None:
        """The finite eigenvalue closest to ``point``, or ``None`` if there are none."""
        if not self.finite:
            return None
        return min((value for value, _ in self.finite), key=lambda value: abs(value - point))


def evaluate_polynomial(blocks: list[ComplexMatrix], mu: complex) -> ComplexMatrix:
    """Evaluate ``sum_k blocks[k] * mu**k`` by Horner's rule."""
    result = np.zeros_like(blocks[-1])
    for block in reversed(blocks):
        result = result * mu + block
    return result


def is_identically_singular(blocks: list[ComplexMatrix], tol: ToleranceConfig | None = None) -> bool:
    """Whether ``det P`` vanishes identically, judged at two generic points."""
    n = blocks[0].shape[0]
    return all(mat_rank(evaluate_polynomial(blocks, point), tol) < n for point in _PROBE_POINTS)


def companion_pencil(blocks: list[ComplexMatrix]) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Block companion pencil ``(C, E)`` with ``C x = mu E x`` iff ``P(mu) v = 0``.

    The eigenvector has the form ``x = (v, mu v, ..., mu^{l-1} v)``; the last
    block row carries ``-P_0 ... -P_{l-1}`` and ``E`` holds ``P_l`` in its last
    diagonal block.
    """
    n = blocks[0].shape[0]
    degree = len(blocks) - 1
    size = n * degree
    lead = n * (degree - 1)
    c = np.zeros((size, size), dtype=np.complex128)
    e = np.eye(size, dtype=np.complex128)
    if degree > 1:
        c[:lead, n:] = np.eye(lead, dtype=np.complex128)
    c[lead:, :] = -np.hstack(blocks[:-1])
    e[lead:, lead:] = blocks[-1]
    return c, e


def cluster_eigenvalues(values: npt.NDArray[np.complex128], tol: ToleranceConfig) -> list[tuple[complex, int]]:
    """Merge eigenvalues closer than ``cluster_radius * max(1, |mu|)``.

    Clusters are the connected components of the closeness graph; each is
    reported as its mean with the component size as multiplicity.
    """
    if values.size == 0:
        return []
    gaps = np.abs(values[:, None] - values[None, :])
    radius = tol.cluster_radius * np.maximum(1.0, np.maximum(np.abs(values)[:, None], np.abs(values)[None, :]))
    count, labels = connected_components(csr_matrix(gaps <= radius), directed=False)
    clusters: list[tuple[complex, int]] = []
    for label in range(count):
        members = values[labels == label]
        clusters.append((complex(np.mean(members)), int(members.size)))
    return sorted(clusters, key=lambda item: (item[0].real, item[0].imag))


def poly_eigenvalues(coeffs: list[npt.ArrayLike], tol: ToleranceConfig | None = None) -> PolyEigenResult:
    """Compute the zeros of ``det P(mu)`` for ``P(mu) = sum_k coeffs[k] mu^k``.

    The coefficients are scaled by their largest norm, linearized into a
    block companion pencil and handed to the QZ algorithm. An eigenvalue with
    ``|alpha| > infinite_modulus * |beta|`` counts as infinite; finite
    eigenvalues are clustered into points with multiplicities.

    Args:
        coeffs: ``P_0, P_1, ..., P_l``, square and of one size. The leading block
            may be singular.
        tol: Tolerances; library defaults when omitted.

    Returns:
        Finite eigenvalues with multiplicities and the infinite count.

    Raises:
        InvalidInputError: For malformed coefficients.
        SingularPencilError: If ``det P`` vanishes identically.

    Example:
        >>> poly_eigenvalues([[[-0.5]], [[1.0]]]).finite
        (((0.5+0j), 1),)
    """
    tol = tol or DEFAULT_TOLERANCE
    blocks = as_square_blocks(coeffs, name="coefficient")
    while len(blocks) > 1 and not np.any(blocks[-1]):
        blocks = blocks[:-1]
    if is_identically_singular(blocks, tol):
        raise SingularPencilError(context=f"matrix polynomial of degree {len(blocks) - 1}")
    if len(blocks) == 1:
        return PolyEigenResult(finite=(), infinite_count=0)

    scale = max(float(linalg.norm(block, 2)) for block in blocks)
    c, e = companion_pencil([block / scale for block in blocks])
    alpha, beta = linalg.eig(c, e, left=False, right=False, homogeneous_eigvals=True)
    finite_mask = np.abs(alpha) <= tol.infinite_modulus * np.abs(beta)
    finite_values = alpha[finite_mask] / beta[finite_mask]
    return PolyEigenResult(
        finite=tuple(cluster_eigenvalues(finite_values, tol)),
        infinite_count=int(np.count_nonzero(~finite_mask)),
    )
