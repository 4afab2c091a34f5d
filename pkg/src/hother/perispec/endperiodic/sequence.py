"""Finitely supported block sequences and their Fourier-Laplace transforms.

The transform of ``u`` is ``u_hat(z) = sum_n u(n) z^n``. On the circle
``|z| = e^delta`` its mean square equals the weighted norm
``sum_n e^{2 delta n} |u(n)|^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from hother.perispec.core.exceptions import InvalidInputError
from hother.perispec.numerics.contour import CircleContour

_VALUES_NDIM = 2


@dataclass(frozen=True, eq=False)
class Sequence:
    """A block sequence ``u(n)`` with finite support.

    Attributes:
        offset: Site of the first stored value.
        values: Array of shape ``(length, n)``; row ``i`` is ``u(offset + i)``.
    """

    offset: int
    values: npt.NDArray[np.complex128]

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.complex128)
        if values.ndim == 1:
            values = values[:, None]
        if values.ndim != _VALUES_NDIM or 0 in values.shape:
            raise InvalidInputError(reason=f"sequence values must be a non-empty (length, n) array, got {values.shape}")
        if not np.all(np.isfinite(values)):
            raise InvalidInputError(reason="sequence values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def delta(cls, site: int, vector: npt.ArrayLike) -> Sequence:
        """The sequence equal to ``vector`` at ``site`` and zero elsewhere."""
        return cls(offset=site, values=np.atleast_2d(np.asarray(vector, dtype=np.complex128)))

    @property
    def block_size(self) -> int:
        """Length ``n`` of each value vector."""
        return int(self.values.shape[1])

    @property
    def sites(self) -> npt.NDArray[np.int_]:
        """Sites carrying stored values."""
        return np.arange(self.offset, self.offset + self.values.shape[0])

    @property
    def width(self) -> int:
        """Number of stored sites."""
        return int(self.values.shape[0])

    def at(self, site: int) -> npt.NDArray[np.complex128]:
        """``u(site)``, zero off the stored range."""
        index = site - self.offset
        if 0 <= index < self.width:
            return self.values[index]
        return np.zeros(self.block_size, dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class SampledTransform:
    """Samples of ``u_hat`` at the nodes of a circle centered at 0.

    Attributes:
        contour: The sampling circle.
        values: Array of shape ``(node_count, n)``.
    """

    contour: CircleContour
    values: npt.NDArray[np.complex128]

    @property
    def radius(self) -> float:
        """Radius of the sampling circle."""
        return self.contour.radius

    def nodes(self) -> npt.NDArray[np.complex128]:
        """The sample points."""
        return self.contour.nodes()


def fl_transform(u: Sequence, radius: float, node_count: int) -> SampledTransform:
    """Sample ``u_hat(z) = sum_n u(n) z^n`` exactly on ``|z| = radius``.

    Example:
        >>> uhat = fl_transform(Sequence(offset=0, values=[[1.0], [1.0]]), 1.0, 16)
        >>> abs(uhat.values[8, 0]) < 1e-12
        True
    """
    contour = CircleContour(radius=radius, node_count=node_count)
    nodes = contour.nodes()
    powers = nodes[:, None] ** u.sites[None, :].astype(np.float64)
    return SampledTransform(contour=contour, values=powers @ u.values)


def fl_inverse(uhat: SampledTransform, n: int) -> npt.NDArray[np.complex128]:
    """Recover ``u(n) = (1/2 pi i) * integral of u_hat(z) z^{-n-1} dz`` on the sampling circle.

    Exact (up to rounding) when the node count exceeds the support width of
    the sequence behind ``uhat``; otherwise sites alias modulo the node count.
    """
    nodes = uhat.nodes()
    return np.mean(uhat.values * nodes[:, None] ** (-n), axis=0)


def weighted_norm(u: Sequence, delta: float) -> float:
    """``(sum_n e^{2 delta n} |u(n)|^2)^{1/2}``."""
    weights = np.exp(2.0 * delta * u.sites)
    return math.sqrt(float(np.sum(weights * np.sum(np.abs(u.values) ** 2, axis=1))))


def circle_energy(uhat: SampledTransform) -> float:
    """``(1/2 pi) * integral of |u_hat|^2 dtheta`` over the sampling circle.

    Equals ``weighted_norm(u, ln r) ** 2`` when the node count exceeds the
    support width of ``u``.
    """
    return float(np.mean(np.sum(np.abs(uhat.values) ** 2, axis=1)))
