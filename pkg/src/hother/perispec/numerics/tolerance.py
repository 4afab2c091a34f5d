"""Tolerance configuration shared by every numerical operation."""

from __future__ import annotations

from typing import Any, Self

from pydantic import BaseModel, ConfigDict, Field, field_validator

from hother.perispec.core.constants import DEFAULTS


class ToleranceConfig(BaseModel):
    """Numerical tolerances.

    Every operation in :mod:`hother.perispec` that makes a numerical decision
    takes ``tol: ToleranceConfig | None``; ``None`` means the defaults below.

    Example:
        >>> tol = ToleranceConfig().override(zero_guard=1e-4)
        >>> tol.zero_guard
        0.0001
    """

    model_config = ConfigDict(frozen=True)

    rank_threshold: float = Field(
        default=DEFAULTS.RANK_THRESHOLD,
        gt=0.0,
        lt=1.0,
        description="Relative singular-value cutoff for numerical rank",
    )
    zero_guard: float = Field(
        default=DEFAULTS.ZERO_GUARD,
        gt=0.0,
        description="Minimum distance from a contour or weight circle to any spectral point",
    )
    quadrature_tol: float = Field(
        default=DEFAULTS.QUADRATURE_TOL,
        gt=0.0,
        description="Target change between successive contour quadratures",
    )
    cluster_radius: float = Field(
        default=DEFAULTS.CLUSTER_RADIUS,
        gt=0.0,
        description="Relative radius for merging computed eigenvalues",
    )
    infinite_modulus: float = Field(
        default=DEFAULTS.INFINITE_MODULUS,
        gt=1.0,
        description="Eigenvalues of larger modulus are counted as infinite",
    )
    quadrature_nodes: int = Field(
        default=DEFAULTS.QUADRATURE_NODES,
        ge=16,
        description="Starting node count for contour quadrature",
    )

    @field_validator("quadrature_nodes")
    @classmethod
    def _even_nodes(cls, value: int) -> int:
        if value % 2:
            msg = f"quadrature_nodes must be even, got {value}"
            raise ValueError(msg)
        return value

    def override(self, **changes: Any) -> Self:
        """Return a validated copy with the non-``None`` changes applied."""
        updates = {key: value for key, value in changes.items() if value is not None}
        if not updates:
            return self
        return self.model_validate(self.model_dump() | updates)


DEFAULT_TOLERANCE = ToleranceConfig()
