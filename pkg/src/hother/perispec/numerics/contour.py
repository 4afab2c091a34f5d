"""Trapezoidal quadrature and phase winding on circles."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from hother.perispec.core.constants import DEFAULTS
from hother.perispec.core.exceptions import NonFiniteSampleError, WindingResolutionError
from hother.perispec.numerics.linalg import ComplexMatrix, JsonComplex
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE, ToleranceConfig

if TYPE_CHECKING:
    from collections.abc import Callable

    import numpy.typing as npt

# Largest phase change accepted between neighbouring nodes
_MAX_PHASE_STEP = math.pi / 4


class CircleContour(BaseModel):
    """A positively oriented circle with equispaced quadrature nodes."""

    model_config = ConfigDict(frozen=True)

    center: JsonComplex = Field(default=0j, description="Center of the circle")
    radius: float = Field(..., gt=0.0, description="Radius of the circle")
    node_count: int = Field(default=DEFAULTS.QUADRATURE_NODES, ge=16, description="Number of quadrature nodes")

    @field_validator("node_count")
    @classmethod
    def _even_nodes(cls, value: int) -> int:
        if value % 2:
            msg = f"node_count must be even, got {value}"
            raise ValueError(msg)
        return value

    def nodes(self) -> npt.NDArray[np.complex128]:
        """Return the quadrature nodes ``center + radius * exp(2 pi i k / N)``."""
        angles = 2.0 * np.pi * np.arange(self.node_count) / self.node_count
        return self.center + self.radius * np.exp(1j * angles)

    def with_nodes(self, node_count: int) -> CircleContour:
        """Return the same circle with a different node count."""
        return CircleContour(center=self.center, radius=self.radius, node_count=node_count)

    def distance_to(self, point: complex) -> float:
        """Distance from ``point`` to the circle itself."""
        return abs(abs(point - self.center) - self.radius)


def contour_integrate(f: Callable[[complex], npt.ArrayLike], contour: CircleContour) -> ComplexMatrix:
    """Compute ``(1/2 pi i) * integral of f over the circle`` by the trapezoidal rule.

    With ``mu = c + r e^{i theta}`` the integral becomes the mean of
    ``f(mu_k) (mu_k - c)`` over the nodes, which converges geometrically for
    integrands analytic near the circle.

    Args:
        f: Matrix-valued (or scalar) function of one complex argument.
        contour: Integration circle.

    Returns:
        The integral as a 2-D array (1x1 for scalar integrands).

    Raises:
        NonFiniteSampleError: If ``f`` is not finite at some node.

    Example:
        >>> contour_integrate(lambda mu: 1 / mu, CircleContour(radius=1.0))
        array([[1.+0.j]])
    """
    terms: list[ComplexMatrix] = []
    for k, mu in enumerate(contour.nodes()):
        point = complex(mu)
        sample = np.atleast_2d(np.asarray(f(point), dtype=np.complex128))
        if not np.all(np.isfinite(sample)):
            raise NonFiniteSampleError(node=k, point=point)
        terms.append(sample * (point - contour.center))
    return np.sum(np.stack(terms), axis=0) / contour.node_count


def converged_integrate(
    f: Callable[[complex], npt.ArrayLike],
    contour: CircleContour,
    tol: ToleranceConfig | None = None,
    *,
    scale: float = 1.0,
) -> ComplexMatrix:
    """Integrate, doubling the node count until the result settles.

    Refinement stops once two successive results differ by at most
    ``quadrature_tol * max(1, scale)`` in max-norm, or the node count reaches
    ``MAX_QUADRATURE_NODES``.

    Args:
        f: Integrand, as for :func:`contour_integrate`.
        contour: Starting circle and node count.
        tol: Tolerances; library defaults when omitted.
        scale: Magnitude of the integrand, used to make the stopping rule relative.
    """
    tol = tol or DEFAULT_TOLERANCE
    current = contour_integrate(f, contour)
    while contour.node_count < DEFAULTS.MAX_QUADRATURE_NODES:
        contour = contour.with_nodes(2 * contour.node_count)
        refined = contour_integrate(f, contour)
        change = float(np.max(np.abs(refined - current)))
        current = refined
        if change <= tol.quadrature_tol * max(1.0, scale):
            break
    return current


def winding_number(
    sample: Callable[[npt.NDArray[np.complex128]], npt.NDArray[np.complex128]],
    contour: CircleContour,
    *,
    max_nodes: int = DEFAULTS.MAX_WINDING_NODES,
) -> int:
    """Count how often a non-vanishing function winds around the origin on a circle.

    The phase is unwrapped node by node; the node count doubles until every
    step is below an eighth of a turn, so no revolution can be missed.

    Args:
        sample: Vectorized function evaluated at all nodes at once.
        contour: Circle and starting node count.
        max_nodes: Give up beyond this many nodes.

    Raises:
        WindingResolutionError: If the phase never resolves, i.e. a zero sits
            on or extremely close to the circle.
    """
    while True:
        values = np.asarray(sample(contour.nodes()), dtype=np.complex128)
        if np.all(np.isfinite(values)) and np.all(values != 0):
            steps = np.angle(np.roll(values, -1) / values)
            if float(np.max(np.abs(steps))) < _MAX_PHASE_STEP:
                return round(float(np.sum(steps)) / (2.0 * math.pi))
        if 2 * contour.node_count > max_nodes:
            raise WindingResolutionError(max_nodes=contour.node_count)
        contour = contour.with_nodes(2 * contour.node_count)
