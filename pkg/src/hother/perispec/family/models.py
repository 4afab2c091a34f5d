"""Result types for spectral analysis of affine families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from hother.perispec.numerics.linalg import ComplexMatrix, ComplexVector, JsonComplex

if TYPE_CHECKING:
    from hother.perispec.family.affine import AffineFamily


class SpectralPoint(BaseModel):
    """A point of the spectral set together with its multiplicity data."""

    model_config = ConfigDict(frozen=True)

    mu: JsonComplex = Field(..., description="Location of the spectral point")
    det_multiplicity: int = Field(..., ge=1, description="Order of the zero of det D")
    kernel_dim: int = Field(..., ge=1, description="Dimension of ker D(mu)")
    d_value: int = Field(..., ge=1, description="Dimension of the Jordan-chain solution space")
    proj_rank: int = Field(..., ge=0, description="Rank of the residue projection")

    @model_validator(mode="after")
    def _check_inequalities(self) -> Self:
        if self.kernel_dim > self.d_value:
            msg = f"kernel_dim {self.kernel_dim} exceeds d_value {self.d_value}"
            raise ValueError(msg)
        if self.proj_rank > self.d_value:
            msg = f"proj_rank {self.proj_rank} exceeds d_value {self.d_value}"
            raise ValueError(msg)
        if self.det_multiplicity < self.kernel_dim:
            msg = f"det_multiplicity {self.det_multiplicity} is below kernel_dim {self.kernel_dim}"
            raise ValueError(msg)
        return self


@dataclass(frozen=True, eq=False)
class LaurentData:
    """Principal part of the resolvent at a spectral point.

    Attributes:
        center: The spectral point.
        coefficients: ``A_{-m}, ..., A_{-1}`` in that order.
        radius: Radius of the circle they were integrated on.
    """

    center: complex
    coefficients: tuple[ComplexMatrix, ...]
    radius: float

    @property
    def pole_order(self) -> int:
        """``m``; 0 at a regular point."""
        return len(self.coefficients)

    def coefficient(self, k: int) -> ComplexMatrix:
        """Return ``A_{-k}`` for ``1 <= k <= m``."""
        if not 1 <= k <= self.pole_order:
            msg = f"A_{{-{k}}} is outside the principal part of order {self.pole_order}"
            raise IndexError(msg)
        return self.coefficients[self.pole_order - k]

    def chain_residual(self, family: AffineFamily) -> float:
        """Largest violation of ``D(mu_j) A_{-m} = 0`` and ``D(mu_j) A_{-k} = V A_{-k-1}``, ``V = -A``."""
        if not self.coefficients:
            return 0.0
        at_point = family(self.center)
        residuals = [float(np.max(np.abs(at_point @ self.coefficient(self.pole_order))))]
        for k in range(1, self.pole_order):
            lhs = at_point @ self.coefficient(k)
            rhs = -family.slope @ self.coefficient(k + 1)
            residuals.append(float(np.max(np.abs(lhs - rhs))))
        return max(residuals)


@dataclass(frozen=True, eq=False)
class JordanChainSet:
    """A basis of solutions of the nested chain system.

    Attributes:
        center: The spectral point.
        chains: One entry per basis solution, each ``(b_{-m}, ..., b_{-1})``.
        solution_space_dim: Number of basis solutions, the point's ``d``.
    """

    center: complex
    chains: tuple[tuple[ComplexVector, ...], ...]
    solution_space_dim: int

    def residual(self, family: AffineFamily) -> float:
        """Largest violation of the chain recurrences over all basis solutions."""
        at_point = family(self.center)
        worst = 0.0
        for chain in self.chains:
            worst = max(worst, float(np.max(np.abs(at_point @ chain[0]))))
            for previous, current in zip(chain, chain[1:], strict=False):
                violation = at_point @ current + family.slope @ previous
                worst = max(worst, float(np.max(np.abs(violation))))
        return worst
