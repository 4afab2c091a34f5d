"""Numeric defaults for perispec.

Every tolerance, node count and size limit used as a default anywhere in the
library lives here, so there is exactly one place to look them up.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class NumericDefaults:
    """Default tolerances and limits.

    Attributes:
        RANK_THRESHOLD: Relative singular-value cutoff for numerical rank.
        ZERO_GUARD: Minimum distance between a contour or weight circle and any
            spectral point.
        QUADRATURE_TOL: Target change between successive contour quadratures.
        CLUSTER_RADIUS: Relative radius within which computed eigenvalues are
            merged into one point with multiplicity.
        INFINITE_MODULUS: Eigenvalues of larger modulus count as infinite.
        QUADRATURE_NODES: Starting node count for contour integrals.
        MAX_QUADRATURE_NODES: Node count at which quadrature refinement stops.
        WINDING_NODES: Starting node count for winding numbers.
        MAX_WINDING_NODES: Node count at which winding refinement gives up.
        TRUNCATION_SITES: Starting number of sites for truncated operators.
        MAX_TRUNCATION_SITES: Largest truncation tried before giving up.
        TRUNCATION_THRESHOLD: Relative singular-value cutoff for truncated kernels.
        PATH_MAX_STEP: Largest parameter step when tracking spectral curves.
        PATH_MIN_STEP: Step below which an ambiguous match is a collision.
        TRACKING_CORE: Half-width in ln|z| of the band around the weight cylinder
            in which spectral curves must stay matched.
        TRACKING_MARGIN: Extra width in ln|z| beyond that band where curves are
            still followed and may begin or end.
        TRACKING_MAX_JUMP: Largest accepted move of a matched zero in one step,
            relative to its modulus.
        CROSSING_TOL: Resolution of crossing localization in t and ln|z|.
        DERIVATIVE_STEP: Finite-difference step for the radial rate at a crossing.
    """

    RANK_THRESHOLD: float = 1e-9
    ZERO_GUARD: float = 1e-3
    QUADRATURE_TOL: float = 1e-10
    CLUSTER_RADIUS: float = 1e-4
    INFINITE_MODULUS: float = 1e6
    QUADRATURE_NODES: int = 128
    MAX_QUADRATURE_NODES: int = 4096
    WINDING_NODES: int = 256
    MAX_WINDING_NODES: int = 65_536
    TRUNCATION_SITES: int = 64
    MAX_TRUNCATION_SITES: int = 512
    TRUNCATION_THRESHOLD: float = 1e-8
    PATH_MAX_STEP: float = 1 / 64
    PATH_MIN_STEP: float = 1e-9
    TRACKING_CORE: float = 0.5
    TRACKING_MARGIN: float = 0.5
    TRACKING_MAX_JUMP: float = 0.05
    CROSSING_TOL: float = 1e-10
    DERIVATIVE_STEP: float = 1e-6


# Singleton instance for convenient access
DEFAULTS = NumericDefaults()
