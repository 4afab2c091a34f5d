"""Fourier-Laplace symbols of discrete end-periodic operators."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING

import numpy as np

from hother.perispec.core.exceptions import InvalidInputError, SingularPencilError
from hother.perispec.numerics.linalg import ComplexMatrix, as_complex_matrix
from hother.perispec.numerics.polyeig import PolyEigenResult, poly_eigenvalues
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE, ToleranceConfig

if TYPE_CHECKING:
    from collections.abc import Mapping

    import numpy.typing as npt

    from hother.perispec.family.affine import AffineFamily


@dataclass(frozen=True, eq=False)
class LaurentSymbol:
    """A matrix Laurent polynomial ``D(z) = sum_{k_min <= k <= k_max} D_k z^k``.

    ``k_min <= 0 <= k_max`` always holds; blocks outside the declared range are
    zero. Zeros of ``det D`` are computed once from the matrix polynomial
    ``z^{-k_min} D(z)``, which also rejects symbols whose determinant vanishes
    identically.

    Attributes:
        k_min: Lowest power, ``-K_minus``.
        coefficients: ``D_{k_min}, ..., D_{k_max}`` in that order.
        tol: Tolerances used for the zero computation.
    """

    k_min: int
    coefficients: tuple[ComplexMatrix, ...]
    tol: ToleranceConfig = field(default=DEFAULT_TOLERANCE, repr=False)

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise InvalidInputError(reason="a symbol needs at least one coefficient block")
        blocks = tuple(
            as_complex_matrix(block, name=f"D_{self.k_min + i}") for i, block in enumerate(self.coefficients)
        )
        shape = blocks[0].shape
        if shape[0] != shape[1] or any(block.shape != shape for block in blocks):
            raise InvalidInputError(reason="symbol blocks must be square and of one size")
        k_max = self.k_min + len(blocks) - 1
        if self.k_min > 0 or k_max < 0:
            raise InvalidInputError(reason=f"the power range [{self.k_min}, {k_max}] must contain 0")
        for block in blocks:
            block.setflags(write=False)
        object.__setattr__(self, "coefficients", blocks)
        try:
            _ = self.eigenvalues
        except SingularPencilError as exc:
            raise SingularPencilError(context="Laurent symbol det D(z)") from exc

    @classmethod
    def from_blocks(cls, blocks: Mapping[int, npt.ArrayLike], tol: ToleranceConfig | None = None) -> LaurentSymbol:
        """Build a symbol from ``{k: D_k}``; missing powers between the extremes are zero.

        Example:
            >>> sym = LaurentSymbol.from_blocks({0: [[-0.5]], 1: [[1.0]]})
            >>> sym(2.0)
            array([[1.5+0.j]])
        """
        if not blocks:
            raise InvalidInputError(reason="a symbol needs at least one coefficient block")
        matrices = {k: as_complex_matrix(block, name=f"D_{k}") for k, block in blocks.items()}
        k_min = min(0, *matrices)
        k_max = max(0, *matrices)
        zero = np.zeros_like(next(iter(matrices.values())))
        coefficients = tuple(matrices.get(k, zero) for k in range(k_min, k_max + 1))
        return cls(k_min=k_min, coefficients=coefficients, tol=tol or DEFAULT_TOLERANCE)

    @property
    def k_max(self) -> int:
        """Highest power, ``K_plus``."""
        return self.k_min + len(self.coefficients) - 1

    @property
    def block_size(self) -> int:
        """Size ``n`` of the coefficient blocks."""
        return int(self.coefficients[0].shape[0])

    @property
    def bandwidth(self) -> int:
        """``max(K_minus, K_plus)``."""
        return max(-self.k_min, self.k_max)

    def block(self, k: int) -> ComplexMatrix:
        """``D_k``, zero outside the power range."""
        if self.k_min <= k <= self.k_max:
            return self.coefficients[k - self.k_min]
        return np.zeros_like(self.coefficients[0])

    def blocks(self) -> dict[int, ComplexMatrix]:
        """All blocks keyed by power."""
        return {self.k_min + i: block for i, block in enumerate(self.coefficients)}

    def __call__(self, z: complex) -> ComplexMatrix:
        """Evaluate ``D(z)``; ``z`` must be non-zero when ``k_min < 0``."""
        result = np.zeros_like(self.coefficients[0])
        for k, block in self.blocks().items():
            result = result + block * z**k
        return result

    def evaluate_many(self, zs: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
        """Evaluate at many points at once; the result has shape ``(len(zs), n, n)``."""
        zs = np.asarray(zs, dtype=np.complex128)
        powers = np.arange(self.k_min, self.k_max + 1)
        weights = zs[:, None] ** powers[None, :]
        return np.einsum("mk,kij->mij", weights, np.stack(self.coefficients))

    def det_many(self, zs: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
        """``det D(z)`` at many points."""
        return np.linalg.det(self.evaluate_many(zs))

    def polynomial_blocks(self) -> list[ComplexMatrix]:
        """Coefficients of the matrix polynomial ``z^{K_minus} D(z)``, lowest power first."""
        return list(self.coefficients)

    @cached_property
    def eigenvalues(self) -> PolyEigenResult:
        """Zeros of ``det(z^{K_minus} D(z))``, including any at the origin."""
        return poly_eigenvalues(self.polynomial_blocks(), self.tol)

    def nonzero_zeros(self) -> list[tuple[complex, int]]:
        """Zeros of ``det D`` away from the origin, with multiplicities."""
        return [(z, multiplicity) for z, multiplicity in self.eigenvalues.finite if abs(z) > self.tol.cluster_radius]

    def det_multiplicity(self, z0: complex) -> int:
        """Order of ``z0`` as a zero of ``det D``; 0 if it is not a zero."""
        return self.eigenvalues.multiplicity_at(z0, self.tol)

    def rescaled(self, factor: float) -> LaurentSymbol:
        """The symbol ``z -> D(factor * z)``, i.e. blocks ``D_k factor^k``."""
        scaled = tuple(block * factor**k for k, block in self.blocks().items())
        return LaurentSymbol(k_min=self.k_min, coefficients=scaled, tol=self.tol)

    def combine(self, other: LaurentSymbol, s: float) -> LaurentSymbol:
        """Entrywise linear interpolation ``(1 - s) * self + s * other`` of the blocks.

        Raises:
            InvalidInputError: If the block sizes differ.
            SingularPencilError: If the interpolated determinant vanishes identically.
        """
        if other.block_size != self.block_size:
            raise InvalidInputError(reason=f"cannot interpolate block sizes {self.block_size} and {other.block_size}")
        k_min = min(self.k_min, other.k_min)
        k_max = max(self.k_max, other.k_max)
        coefficients = tuple((1.0 - s) * self.block(k) + s * other.block(k) for k in range(k_min, k_max + 1))
        return LaurentSymbol(k_min=k_min, coefficients=coefficients, tol=self.tol)


@dataclass(frozen=True, eq=False)
class AffineLogSymbol:
    """The symbol ``D(z) = T + (ln z) A`` of an affine family, on a branch-safe disk.

    The principal logarithm is used, so the disk must stay clear of the
    closed negative real axis. On the disk, zeros of ``det D`` are the images
    ``z = e^mu`` of the family's spectral points and keep their multiplicities.

    Attributes:
        family: The family ``T + mu A``.
        center: Disk center.
        radius: Disk radius.
    """

    family: AffineFamily
    center: complex
    radius: float

    def __post_init__(self) -> None:
        if self.radius <= 0.0:
            raise InvalidInputError(reason=f"disk radius must be positive, got {self.radius}")
        object.__setattr__(self, "center", complex(self.center))
        if _distance_to_cut(self.center) <= self.radius:
            reason = f"disk at {self.center} of radius {self.radius} meets the branch cut of ln z"
            raise InvalidInputError(reason=reason)

    @property
    def block_size(self) -> int:
        """Size of the family."""
        return self.family.dimension

    def contains(self, z: complex) -> bool:
        """Whether ``z`` lies in the open disk."""
        return abs(z - self.center) < self.radius

    def __call__(self, z: complex) -> ComplexMatrix:
        """Evaluate ``T + (ln z) A``."""
        return self.family(cmath.log(z))

    def nonzero_zeros(self) -> list[tuple[complex, int]]:
        """Zeros of ``det D`` inside the disk, with multiplicities."""
        zeros = [(cmath.exp(mu), multiplicity) for mu, multiplicity in self.family.eigenvalues.finite]
        return [(z, multiplicity) for z, multiplicity in zeros if self.contains(z)]

    def det_multiplicity(self, z0: complex) -> int:
        """Order of ``z0`` as a zero of ``det D``; 0 outside the disk or at a regular point."""
        if not self.contains(z0):
            return 0
        return self.family.eigenvalues.multiplicity_at(cmath.log(z0), self.family.tol)


def _distance_to_cut(z: complex) -> float:
    """Distance from ``z`` to the closed negative real axis."""
    if z.real >= 0.0:
        return abs(z)
    return abs(z.imag)
