"""Spectral analysis of affine families: resolvents, residues, Laurent data, Jordan chains."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from scipy import linalg

from hother.perispec.core._logger import default_logger
from hother.perispec.core.exceptions import ContourProximityError, NearSingularError, PoleOrderError
from hother.perispec.family.models import JordanChainSet, LaurentData, SpectralPoint
from hother.perispec.numerics.contour import CircleContour, converged_integrate
from hother.perispec.numerics.linalg import ComplexMatrix, mat_rank, spectral_norm
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE, ToleranceConfig

if TYPE_CHECKING:
    from hother.perispec.core._logger import Logger
    from hother.perispec.family.affine import AffineFamily

_DEFAULT_RADIUS = 1.0


def _point_mu(pt: SpectralPoint | complex) -> complex:
    return pt.mu if isinstance(pt, SpectralPoint) else complex(pt)


def _solve_identity(family: AffineFamily, mu: complex) -> ComplexMatrix:
    return linalg.solve(family(mu), np.eye(family.dimension, dtype=np.complex128))


def _guard_distance(family: AffineFamily, mu: complex, tol: ToleranceConfig) -> None:
    nearest = family.nearest_spectral_point(mu)
    if nearest is not None and abs(nearest - mu) <= tol.zero_guard:
        raise NearSingularError(point=nearest, distance=abs(nearest - mu))


def resolvent(family: AffineFamily, mu: complex, tol: ToleranceConfig | None = None) -> ComplexMatrix:
    """Return ``R_mu = (T + mu A)^{-1}``.

    Args:
        family: The family.
        mu: Evaluation point, farther than ``zero_guard`` from the spectral set.
        tol: Tolerances; library defaults when omitted.

    Raises:
        NearSingularError: If ``mu`` is within ``zero_guard`` of a spectral point.
    """
    tol = tol or DEFAULT_TOLERANCE
    _guard_distance(family, mu, tol)
    return _solve_identity(family, mu)


def compact_reduction(family: AffineFamily, mu0: complex, tol: ToleranceConfig | None = None) -> ComplexMatrix:
    """Return ``K = A (T + mu0 A)^{-1}``.

    Since ``D(mu) = (I + (mu - mu0) K) D(mu0)``, the non-zero eigenvalues
    ``zeta`` of ``K`` are in bijection with the spectral points through
    ``mu = mu0 - 1/zeta``; see :func:`reduction_spectrum`.

    Raises:
        NearSingularError: If ``mu0`` is (within ``zero_guard`` of) a spectral point.
    """
    tol = tol or DEFAULT_TOLERANCE
    _guard_distance(family, mu0, tol)
    return linalg.solve(family(mu0).T, family.slope.T).T


def reduction_spectrum(
    reduction: ComplexMatrix, mu0: complex, tol: ToleranceConfig | None = None
) -> list[complex]:
    """Map the non-zero eigenvalues of a compact reduction back to spectral points.

    Returns:
        ``mu0 - 1/zeta`` for every eigenvalue ``zeta`` above the rank threshold,
        sorted by real then imaginary part.
    """
    tol = tol or DEFAULT_TOLERANCE
    zetas = linalg.eigvals(reduction)
    cutoff = tol.rank_threshold * max(1.0, spectral_norm(reduction))
    points = [mu0 - 1.0 / complex(zeta) for zeta in zetas if abs(zeta) > cutoff]
    return sorted(points, key=lambda mu: (mu.real, mu.imag))


def isolating_radius(family: AffineFamily, mu: complex, tol: ToleranceConfig | None = None) -> float:
    """Default circle radius around ``mu``: half the gap to the nearest other spectral point.

    The radius is 1.0 when there is no other point and never below
    ``zero_guard``.

    Raises:
        ContourProximityError: If the circle would pass within ``zero_guard``
            of another spectral point.
    """
    tol = tol or DEFAULT_TOLERANCE
    others = family.other_spectral_points(mu)
    if not others:
        return _DEFAULT_RADIUS
    neighbor = min(others, key=lambda value: abs(value - mu))
    gap = abs(neighbor - mu)
    radius = max(gap / 2.0, tol.zero_guard)
    if gap - radius <= tol.zero_guard:
        raise ContourProximityError(center=mu, radius=radius, neighbor=neighbor)
    return radius


def _checked_radius(family: AffineFamily, mu: complex, radius: float | None, tol: ToleranceConfig) -> float:
    if radius is None:
        return isolating_radius(family, mu, tol)
    for neighbor in family.other_spectral_points(mu):
        if abs(neighbor - mu) < 2.0 * radius or abs(abs(neighbor - mu) - radius) <= tol.zero_guard:
            raise ContourProximityError(center=mu, radius=radius, neighbor=neighbor)
    return radius


def _resolvent_scale(family: AffineFamily, contour: CircleContour) -> float:
    return max(spectral_norm(_solve_identity(family, complex(node))) for node in contour.nodes())


def _principal_moment(
    family: AffineFamily, contour: CircleContour, k: int, scale: float, tol: ToleranceConfig
) -> ComplexMatrix:
    """``A_{-k} = (1/2 pi i) * integral of (mu - mu_j)^{k-1} R_mu``."""
    center = contour.center

    def integrand(mu: complex) -> ComplexMatrix:
        return (mu - center) ** (k - 1) * _solve_identity(family, mu)

    return converged_integrate(integrand, contour, tol, scale=scale * contour.radius**k)


def residue_projection(
    family: AffineFamily,
    pt: SpectralPoint | complex,
    tol: ToleranceConfig | None = None,
    *,
    radius: float | None = None,
) -> tuple[ComplexMatrix, int]:
    """Compute the residue projection ``P = (1/2 pi i) * integral of R_mu`` around a point.

    Args:
        family: The family.
        pt: Spectral point (or any complex center).
        tol: Tolerances; library defaults when omitted.
        radius: Circle radius; defaults to :func:`isolating_radius`.

    Returns:
        ``(P, rank P)``. The rank is taken relative to the integrand magnitude,
        so a center enclosing no pole gives rank 0.

    Raises:
        ContourProximityError: If the circle does not isolate the point.
    """
    tol = tol or DEFAULT_TOLERANCE
    mu = _point_mu(pt)
    radius = _checked_radius(family, mu, radius, tol)
    contour = CircleContour(center=mu, radius=radius, node_count=tol.quadrature_nodes)
    scale = _resolvent_scale(family, contour)
    projection = _principal_moment(family, contour, 1, scale, tol)
    return projection, mat_rank(projection, tol, scale=scale * contour.radius)


def laurent_coefficients(
    family: AffineFamily,
    pt: SpectralPoint | complex,
    order: int | None = None,
    tol: ToleranceConfig | None = None,
    *,
    logger: Logger | None = None,
) -> LaurentData:
    """Extract the principal part ``A_{-m}, ..., A_{-1}`` of the resolvent.

    The pole order is the largest ``k <= n`` with
    ``||A_{-k}|| > rank_threshold * max||R|| * r^k`` on the integration circle.

    Args:
        family: The family.
        pt: Spectral point (or any complex center).
        order: Number of coefficients wanted; the detected pole order when omitted.
            A smaller order keeps ``A_{-order}, ..., A_{-1}``.
        tol: Tolerances; library defaults when omitted.
        logger: Structured logger.

    Raises:
        PoleOrderError: If ``order`` exceeds the detected pole order.
        ContourProximityError: If the circle does not isolate the point.
    """
    tol = tol or DEFAULT_TOLERANCE
    logger = logger or default_logger(__name__)
    mu = _point_mu(pt)
    contour = CircleContour(center=mu, radius=isolating_radius(family, mu, tol), node_count=tol.quadrature_nodes)
    scale = _resolvent_scale(family, contour)

    moments = [_principal_moment(family, contour, k, scale, tol) for k in range(1, family.dimension + 1)]
    detected = 0
    for k, moment in enumerate(moments, start=1):
        if spectral_norm(moment) > tol.rank_threshold * scale * contour.radius**k:
            detected = k
    logger.debug("pole_order_detected", mu=mu, order=detected, radius=contour.radius)

    if order is not None and order > detected:
        raise PoleOrderError(requested=order, detected=detected)
    kept = detected if order is None else order
    coefficients = tuple(reversed(moments[:kept]))
    return LaurentData(center=mu, coefficients=coefficients, radius=contour.radius)


def chain_system(family: AffineFamily, mu: complex, order: int) -> ComplexMatrix:
    """Block matrix of the nested system on ``x = (b_{-m}, ..., b_{-1})``.

    Row block 0 is ``D(mu) b_{-m} = 0``; row block ``i`` is
    ``D(mu) b_{-m+i} - V b_{-m+i-1} = 0`` with ``V = -A``.
    """
    n = family.dimension
    at_point = family(mu)
    system = np.zeros((n * order, n * order), dtype=np.complex128)
    for i in range(order):
        system[i * n : (i + 1) * n, i * n : (i + 1) * n] = at_point
        if i > 0:
            system[i * n : (i + 1) * n, (i - 1) * n : i * n] = family.slope
    return system


def jordan_chain_dim(
    family: AffineFamily,
    pt: SpectralPoint | complex,
    order: int | None = None,
    tol: ToleranceConfig | None = None,
) -> tuple[int, JordanChainSet]:
    """Dimension ``d`` of the solution space of the nested chain system.

    Solutions are tuples ``(b_{-m}, ..., b_{-1})`` with ``D(mu_j) b_{-m} = 0`` and
    ``D(mu_j) b_{-l} = V b_{-l-1}``, ``V = -A``. Flipping the sign of ``V``
    rescales ``b_{-l}`` by ``(-1)^l`` and leaves ``d`` unchanged.

    Args:
        family: The family.
        pt: Spectral point (or any complex center).
        order: Chain length ``m``; the detected pole order when omitted.
        tol: Tolerances; library defaults when omitted.

    Returns:
        ``(d, chains)``; ``d = 0`` at a regular point.
    """
    tol = tol or DEFAULT_TOLERANCE
    mu = _point_mu(pt)
    if order is None:
        order = laurent_coefficients(family, mu, tol=tol).pole_order
    if order == 0:
        return 0, JordanChainSet(center=mu, chains=(), solution_space_dim=0)

    n = family.dimension
    basis = linalg.null_space(chain_system(family, mu, order), rcond=tol.rank_threshold)
    chains = tuple(
        tuple(np.ascontiguousarray(basis[i * n : (i + 1) * n, column]) for i in range(order))
        for column in range(basis.shape[1])
    )
    d = len(chains)
    return d, JordanChainSet(center=mu, chains=chains, solution_space_dim=d)


def spectral_set(
    family: AffineFamily, tol: ToleranceConfig | None = None, *, logger: Logger | None = None
) -> list[SpectralPoint]:
    """All zeros of ``det(T + mu A)`` with their multiplicity data.

    Args:
        family: The family.
        tol: Tolerances; library defaults when omitted.
        logger: Structured logger.

    Returns:
        Spectral points sorted by real then imaginary part.
    """
    tol = tol or DEFAULT_TOLERANCE
    logger = logger or default_logger(__name__)
    points: list[SpectralPoint] = []
    for mu, multiplicity in family.eigenvalues.finite:
        kernel_dim = max(1, family.dimension - mat_rank(family(mu), tol))
        order = laurent_coefficients(family, mu, tol=tol, logger=logger).pole_order
        d, _ = jordan_chain_dim(family, mu, order, tol)
        _, rank = residue_projection(family, mu, tol)
        point = SpectralPoint(
            mu=mu,
            det_multiplicity=multiplicity,
            kernel_dim=kernel_dim,
            d_value=d,
            proj_rank=rank,
        )
        logger.debug(
            "spectral_point_found",
            mu=mu,
            det_multiplicity=multiplicity,
            kernel_dim=kernel_dim,
            d_value=d,
            proj_rank=rank,
        )
        points.append(point)
    return points
