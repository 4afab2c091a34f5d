"""End-periodic block-Toeplitz operators on weighted half-line spaces.

The operator acts by ``(Tu)(i) = sum_j D_{i-j} u(j)`` on sequences supported
on sites ``i >= 0``, in the space normed by ``weighted_norm(u, delta)``. It is
Fredholm exactly when ``det D`` has no zero on ``|z| = e^delta``, and its index
is minus the winding number of ``det D`` around that circle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
from scipy import linalg

from hother.perispec.core._logger import default_logger
from hother.perispec.core.constants import DEFAULTS
from hother.perispec.core.exceptions import (
    BoundaryProximityError,
    InvalidInputError,
    NotFredholmError,
    TruncationNotStabilizedError,
)
from hother.perispec.endperiodic.symbol import AffineLogSymbol, LaurentSymbol
from hother.perispec.family.spectral import jordan_chain_dim
from hother.perispec.numerics.contour import CircleContour, winding_number
from hother.perispec.numerics.linalg import ComplexMatrix, as_complex_matrix
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE, ToleranceConfig

if TYPE_CHECKING:
    from collections.abc import Iterable

    from hother.perispec.core._logger import Logger


@dataclass(frozen=True, eq=False)
class CapEntry:
    """Override of the block at ``(row, col)`` in the compact piece.

    Attributes:
        row: Output site.
        col: Input site.
        block: Replacement ``n x n`` block.
    """

    row: int
    col: int
    block: ComplexMatrix

    def __post_init__(self) -> None:
        if self.row < 0 or self.col < 0:
            raise InvalidInputError(reason=f"cap entry ({self.row}, {self.col}) has a negative site")
        block = as_complex_matrix(self.block, name=f"cap[{self.row}, {self.col}]")
        block.setflags(write=False)
        object.__setattr__(self, "block", block)


@dataclass(frozen=True, eq=False)
class EndPeriodicOperator:
    """A discrete end-periodic operator: symbol, weight and a finite cap.

    Attributes:
        symbol: Fourier-Laplace symbol of the periodic end.
        delta: Weight; the space is normed by ``e^{delta n}``.
        cap: Block overrides at finitely many sites, modelling the compact piece.
    """

    symbol: LaurentSymbol
    delta: float = 0.0
    cap: tuple[CapEntry, ...] = field(default=())

    def __post_init__(self) -> None:
        if not math.isfinite(self.delta):
            raise InvalidInputError(reason=f"weight must be finite, got {self.delta}")
        object.__setattr__(self, "cap", tuple(self.cap))
        expected = (self.symbol.block_size, self.symbol.block_size)
        for entry in self.cap:
            if entry.block.shape != expected:
                reason = f"cap block at ({entry.row}, {entry.col}) has shape {entry.block.shape}, expected {expected}"
                raise InvalidInputError(reason=reason)

    @property
    def weight_radius(self) -> float:
        """``e^delta``, the radius of the weight circle."""
        return math.exp(self.delta)

    @property
    def cap_size(self) -> int:
        """Number of leading sites touched by the cap."""
        return max((max(entry.row, entry.col) + 1 for entry in self.cap), default=0)

    def with_weight(self, delta: float) -> EndPeriodicOperator:
        """Same symbol and cap at another weight."""
        return EndPeriodicOperator(symbol=self.symbol, delta=delta, cap=self.cap)

    def with_cap(self, cap: Iterable[CapEntry]) -> EndPeriodicOperator:
        """Same symbol and weight with another cap."""
        return EndPeriodicOperator(symbol=self.symbol, delta=self.delta, cap=tuple(cap))

    def section(self, rows: int, cols: int) -> ComplexMatrix:
        """Dense ``e^{delta n}``-conjugated matrix of sites ``[0, rows) x [0, cols)``.

        Block ``(i, j)`` is ``D_{i-j} e^{delta (i-j)}``, with cap overrides
        conjugated the same way.
        """
        n = self.symbol.block_size
        matrix = np.zeros((rows * n, cols * n), dtype=np.complex128)
        for k, block in self.symbol.blocks().items():
            weighted = block * math.exp(self.delta * k)
            for j in range(max(0, -k), min(cols, rows - k)):
                i = j + k
                matrix[i * n : (i + 1) * n, j * n : (j + 1) * n] = weighted
        for entry in self.cap:
            if entry.row < rows and entry.col < cols:
                weighted = entry.block * math.exp(self.delta * (entry.row - entry.col))
                matrix[entry.row * n : (entry.row + 1) * n, entry.col * n : (entry.col + 1) * n] = weighted
        return matrix


@dataclass(frozen=True, slots=True)
class TruncationResult:
    """Kernel and cokernel dimensions read off dense truncations.

    Attributes:
        ker_dim: Near-null input directions.
        coker_dim: Near-null output directions.
        sites: Truncation size at which the counts stabilized.
    """

    ker_dim: int
    coker_dim: int
    sites: int

    @property
    def index(self) -> int:
        """``ker_dim - coker_dim``."""
        return self.ker_dim - self.coker_dim


def _check_annulus_boundary(zeros: list[tuple[complex, int]], radii: Iterable[float], tol: ToleranceConfig) -> None:
    for radius in radii:
        for z, _ in zeros:
            if abs(abs(z) - radius) <= tol.zero_guard:
                raise BoundaryProximityError(zero=z, radius=radius)


def symbol_zeros(
    sym: LaurentSymbol | AffineLogSymbol, r_min: float, r_max: float, tol: ToleranceConfig | None = None
) -> list[tuple[complex, int]]:
    """Zeros of ``det D(z)`` in the open annulus ``r_min < |z| < r_max``.

    The origin is never reported.

    Args:
        sym: The symbol.
        r_min: Inner radius, ``>= 0``.
        r_max: Outer radius, ``> r_min``.
        tol: Tolerances; library defaults when omitted.

    Returns:
        ``(z0, det_multiplicity)`` pairs sorted by modulus then argument.

    Raises:
        InvalidInputError: If the radii are not ordered.
        BoundaryProximityError: If a zero lies within ``zero_guard`` of either circle.
    """
    tol = tol or DEFAULT_TOLERANCE
    if not 0.0 <= r_min < r_max:
        raise InvalidInputError(reason=f"annulus needs 0 <= r_min < r_max, got ({r_min}, {r_max})")
    zeros = sym.nonzero_zeros()
    _check_annulus_boundary(zeros, (r for r in (r_min, r_max) if r > 0.0), tol)
    inside = [(z, multiplicity) for z, multiplicity in zeros if r_min < abs(z) < r_max]
    return sorted(inside, key=lambda item: (abs(item[0]), np.angle(item[0])))


def d_value(
    sym: LaurentSymbol | AffineLogSymbol,
    z0: complex,
    tol: ToleranceConfig | None = None,
    *,
    logger: Logger | None = None,
) -> int:
    """The index-change weight ``d(z0)`` of a zero of ``det D``.

    For an :class:`AffineLogSymbol` this is the Jordan-chain dimension of the
    family at ``mu = ln z0``. For a general :class:`LaurentSymbol` it is the
    multiplicity of ``z0`` as a zero of ``det D``; the two agree on affine
    families.

    Returns:
        ``d(z0)``, or 0 (with a ``d_value_not_a_zero`` warning) when ``z0`` is
        not a zero.
    """
    tol = tol or DEFAULT_TOLERANCE
    logger = logger or default_logger(__name__)
    multiplicity = sym.det_multiplicity(z0)
    if multiplicity == 0:
        logger.warning("d_value_not_a_zero", z=z0)
        return 0
    if isinstance(sym, AffineLogSymbol):
        d, _ = jordan_chain_dim(sym.family, cmath.log(z0), tol=tol)
        return d
    return multiplicity


def _nearest_zero_to_circle(sym: LaurentSymbol, radius: float) -> complex | None:
    zeros = sym.nonzero_zeros()
    if not zeros:
        return None
    return min((z for z, _ in zeros), key=lambda z: abs(abs(z) - radius))


def is_fredholm(op: EndPeriodicOperator, tol: ToleranceConfig | None = None) -> bool:
    """Whether ``D(z)`` is invertible on the whole weight circle ``|z| = e^delta``.

    The smallest singular value is sampled at equispaced nodes and at the
    radial projection of every zero, and compared with ``rank_threshold``
    times the largest norm of ``D`` on the circle. The cap plays no role.
    """
    tol = tol or DEFAULT_TOLERANCE
    radius = op.weight_radius
    nodes = CircleContour(radius=radius, node_count=DEFAULTS.WINDING_NODES).nodes()
    projections = np.array([z / abs(z) * radius for z, _ in op.symbol.nonzero_zeros()], dtype=np.complex128)
    samples = op.symbol.evaluate_many(np.concatenate([nodes, projections]))
    singular_values = np.linalg.svd(samples, compute_uv=False)
    scale = float(np.max(singular_values[:, 0]))
    return bool(np.min(singular_values[:, -1]) > tol.rank_threshold * scale)


def _require_fredholm(op: EndPeriodicOperator, tol: ToleranceConfig) -> None:
    if not is_fredholm(op, tol):
        zero = _nearest_zero_to_circle(op.symbol, op.weight_radius)
        raise NotFredholmError(zero=zero if zero is not None else complex("nan"), delta=op.delta)


def index(op: EndPeriodicOperator, tol: ToleranceConfig | None = None) -> int:
    """Fredholm index on the ``e^{delta n}``-weighted half-line.

    Computed as minus the winding number of ``det D`` around ``|z| = e^delta``;
    the sign makes ``z - 0.5`` at ``delta = 0`` have index -1, in agreement
    with :func:`truncation_kernels`. The cap does not enter.

    Raises:
        NotFredholmError: If ``det D`` vanishes on the weight circle.

    Example:
        >>> sym = LaurentSymbol.from_blocks({0: [[-0.5]], 1: [[1.0]]})
        >>> index(EndPeriodicOperator(symbol=sym, delta=0.0))
        -1
    """
    tol = tol or DEFAULT_TOLERANCE
    _require_fredholm(op, tol)
    contour = CircleContour(radius=op.weight_radius, node_count=DEFAULTS.WINDING_NODES)
    return -winding_number(op.symbol.det_many, contour)


def _small_singular_count(matrix: ComplexMatrix, threshold: float) -> int:
    singular_values = linalg.svdvals(matrix)
    return int(np.count_nonzero(singular_values <= threshold))


def _truncation_counts(op: EndPeriodicOperator, sites: int) -> tuple[int, int]:
    n = op.symbol.block_size
    big = op.section(sites + op.symbol.bandwidth, sites + op.symbol.bandwidth)
    threshold = DEFAULTS.TRUNCATION_THRESHOLD * float(linalg.svdvals(big)[0])
    ker_dim = _small_singular_count(big[:, : sites * n], threshold)
    coker_dim = _small_singular_count(big[: sites * n, :], threshold)
    return ker_dim, coker_dim


def _decay_sites(op: EndPeriodicOperator) -> int:
    """Sites over which the slowest kernel or cokernel mode falls below the truncation threshold."""
    offsets = [abs(math.log(abs(z)) - op.delta) for z, _ in op.symbol.nonzero_zeros()]
    if not offsets:
        return 1
    return math.ceil(math.log(1.0 / DEFAULTS.TRUNCATION_THRESHOLD) / min(offsets))


def truncation_kernels(
    op: EndPeriodicOperator,
    n_sites: int | None = None,
    tol: ToleranceConfig | None = None,
    *,
    logger: Logger | None = None,
) -> TruncationResult:
    """Kernel and cokernel dimensions from dense weighted truncations.

    Inputs supported on ``[0, N)`` are mapped to outputs on ``[0, N + w)``
    (``w`` the bandwidth); near-zero singular values of that tall matrix count
    the kernel. Symmetrically the wide section of outputs on ``[0, N)`` counts
    the cokernel. ``N`` doubles until two consecutive sizes agree.

    Args:
        op: The operator.
        n_sites: Starting truncation size; ``TRUNCATION_SITES`` when omitted.
            Raised to twice the cap size if smaller, and to the length over
            which modes of the zero nearest the weight circle decay below
            ``TRUNCATION_THRESHOLD``, so the first two sizes cannot both miss
            a slowly decaying mode.
        tol: Tolerances; library defaults when omitted.
        logger: Structured logger.

    Raises:
        NotFredholmError: If the operator is not Fredholm.
        TruncationNotStabilizedError: If no two consecutive sizes up to
            ``MAX_TRUNCATION_SITES`` agree.
    """
    tol = tol or DEFAULT_TOLERANCE
    logger = logger or default_logger(__name__)
    _require_fredholm(op, tol)
    decay = min(_decay_sites(op), DEFAULTS.MAX_TRUNCATION_SITES // 2)
    sites = max(n_sites or DEFAULTS.TRUNCATION_SITES, 2 * op.cap_size, decay)
    previous = _truncation_counts(op, sites)
    while 2 * sites <= DEFAULTS.MAX_TRUNCATION_SITES:
        sites *= 2
        current = _truncation_counts(op, sites)
        logger.debug("truncation_counted", sites=sites, ker_dim=current[0], coker_dim=current[1])
        if current == previous:
            logger.debug("truncation_stabilized", sites=sites // 2)
            return TruncationResult(ker_dim=current[0], coker_dim=current[1], sites=sites // 2)
        previous = current
    raise TruncationNotStabilizedError(max_sites=sites)


def index_change(
    sym: LaurentSymbol,
    delta: float,
    delta2: float,
    tol: ToleranceConfig | None = None,
    *,
    logger: Logger | None = None,
) -> int:
    """Sum of ``d(z)`` over zeros with ``e^delta < |z| < e^delta2``.

    This equals ``index(delta) - index(delta2)``.

    Raises:
        InvalidInputError: If ``delta > delta2``.
        BoundaryProximityError: If a zero lies within ``zero_guard`` of either circle.
    """
    tol = tol or DEFAULT_TOLERANCE
    if delta > delta2:
        raise InvalidInputError(reason=f"index_change needs delta <= delta2, got {delta} > {delta2}")
    zeros = sym.nonzero_zeros()
    _check_annulus_boundary(zeros, (math.exp(delta), math.exp(delta2)), tol)
    if delta == delta2:
        return 0
    inside = symbol_zeros(sym, math.exp(delta), math.exp(delta2), tol)
    return sum(d_value(sym, z, tol, logger=logger) for z, _ in inside)

