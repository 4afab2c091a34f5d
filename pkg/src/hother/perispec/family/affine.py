"""Affine holomorphic families ``D(mu) = T + mu A``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING

from hother.perispec.core.exceptions import InvalidInputError, SingularPencilError
from hother.perispec.numerics.linalg import ComplexMatrix, as_complex_matrix
from hother.perispec.numerics.polyeig import PolyEigenResult, poly_eigenvalues
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE, ToleranceConfig

if TYPE_CHECKING:
    import numpy.typing as npt


@dataclass(frozen=True, eq=False)
class AffineFamily:
    """A finite-dimensional family ``D(mu) = base + mu * slope``.

    ``base`` plays the perturbed operator ``T`` and ``slope`` the coefficient
    ``A`` of the spectral parameter. The family is immutable; its eigenvalues
    are computed once at construction, which also rejects pencils whose
    determinant vanishes identically.

    Example:
        >>> import numpy as np
        >>> fam = AffineFamily.from_arrays(np.diag([1.0, -1.0]), np.eye(2))
        >>> [mu for mu, _ in fam.eigenvalues.finite]
        [(-1+0j), (1+0j)]
    """

    base: ComplexMatrix
    slope: ComplexMatrix
    tol: ToleranceConfig = field(default=DEFAULT_TOLERANCE, repr=False)

    def __post_init__(self) -> None:
        base = as_complex_matrix(self.base, name="T")
        slope = as_complex_matrix(self.slope, name="A")
        if base.shape[0] != base.shape[1] or base.shape != slope.shape:
            raise InvalidInputError(reason=f"T and A must be square of one size, got {base.shape} and {slope.shape}")
        base.setflags(write=False)
        slope.setflags(write=False)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "slope", slope)
        try:
            _ = self.eigenvalues
        except SingularPencilError as exc:
            raise SingularPencilError(context="affine family T + mu A") from exc

    @classmethod
    def from_arrays(
        cls, base: npt.ArrayLike, slope: npt.ArrayLike, tol: ToleranceConfig | None = None
    ) -> AffineFamily:
        """Build a family from anything array-like."""
        return cls(
            base=as_complex_matrix(base, name="T"),
            slope=as_complex_matrix(slope, name="A"),
            tol=tol or DEFAULT_TOLERANCE,
        )

    @property
    def dimension(self) -> int:
        """Matrix size ``n``."""
        return int(self.base.shape[0])

    def __call__(self, mu: complex) -> ComplexMatrix:
        """Evaluate ``D(mu)``."""
        return self.base + mu * self.slope

    @cached_property
    def eigenvalues(self) -> PolyEigenResult:
        """Zeros of ``det D(mu)`` with multiplicities."""
        return poly_eigenvalues([self.base, self.slope], self.tol)

    def nearest_spectral_point(self, mu: complex) -> complex | None:
        """The spectral point closest to ``mu``, or ``None`` if the set is empty."""
        return self.eigenvalues.nearest(mu)

    def other_spectral_points(self, mu: complex) -> list[complex]:
        """Spectral points not clustered at ``mu``."""
        radius = self.tol.cluster_radius * max(1.0, abs(mu))
        return [value for value, _ in self.eigenvalues.finite if abs(value - mu) > radius]
