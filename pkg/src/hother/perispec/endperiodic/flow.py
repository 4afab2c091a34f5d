"""Spectral curves of symbol paths and end-periodic spectral flow.

Along a path ``t -> D_t`` the zeros of ``det D_t`` trace curves ``z_j(t)``.
Each transversal passage through the weight cylinder ``|z| = e^delta``
changes the index by the sign of ``d/dt ln|z_j(t)|``: +1 when the curve
leaves the disk, -1 when it enters. Summed over the path this is the
spectral flow, equal to ``index(t=1) - index(t=0)``.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.optimize import linear_sum_assignment

from hother.perispec.core._logger import default_logger
from hother.perispec.core.constants import DEFAULTS
from hother.perispec.core.exceptions import (
    DegenerateCrossingError,
    InvalidInputError,
    IrregularEndpointError,
    TangentialCrossingError,
    TrackingCollisionError,
)
from hother.perispec.numerics.linalg import JsonComplex
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE, ToleranceConfig

if TYPE_CHECKING:
    import numpy.typing as npt

    from hother.perispec.core._logger import Logger
    from hother.perispec.endperiodic.symbol import LaurentSymbol

type ZeroSet = list[tuple[complex, int]]


@dataclass(frozen=True, eq=False)
class SymbolPath:
    """A piecewise-linear path of Laurent symbols over ``t in [0, 1]``.

    Coefficient blocks are interpolated entrywise between grid nodes. Both
    endpoint symbols must be regular: no zero of ``det D`` within
    ``zero_guard`` of the cylinder ``|z| = e^delta``.

    Attributes:
        grid: Strictly increasing nodes from 0 to 1.
        symbols: One symbol per node, all of one block size.
        delta: Weight of the cylinder the flow is measured against.
        tol: Tolerances.
    """

    grid: tuple[float, ...]
    symbols: tuple[LaurentSymbol, ...]
    delta: float = 0.0
    tol: ToleranceConfig = field(default=DEFAULT_TOLERANCE, repr=False)

    def __post_init__(self) -> None:
        grid = tuple(float(t) for t in self.grid)
        symbols = tuple(self.symbols)
        if len(grid) < 2 or len(grid) != len(symbols):  # noqa: PLR2004
            raise InvalidInputError(reason=f"a path needs matching grid and symbols of length >= 2, got {len(grid)}")
        if grid[0] != 0.0 or grid[-1] != 1.0 or any(b <= a for a, b in zip(grid, grid[1:], strict=False)):
            raise InvalidInputError(reason="path grid must increase strictly from 0 to 1")
        if len({symbol.block_size for symbol in symbols}) != 1:
            raise InvalidInputError(reason="path symbols must share one block size")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "symbols", symbols)
        radius = self.radius
        for endpoint, symbol in ((0.0, symbols[0]), (1.0, symbols[-1])):
            for z, _ in symbol.nonzero_zeros():
                if abs(abs(z) - radius) <= self.tol.zero_guard:
                    raise IrregularEndpointError(endpoint=endpoint, zero=z)

    @classmethod
    def linear(
        cls, start: LaurentSymbol, end: LaurentSymbol, *, delta: float = 0.0, tol: ToleranceConfig | None = None
    ) -> SymbolPath:
        """The straight path from ``start`` to ``end``."""
        return cls(grid=(0.0, 1.0), symbols=(start, end), delta=delta, tol=tol or DEFAULT_TOLERANCE)

    @property
    def radius(self) -> float:
        """``e^delta``, the radius of the crossing cylinder."""
        return math.exp(self.delta)

    def symbol_at(self, t: float) -> LaurentSymbol:
        """The interpolated symbol ``D_t``."""
        if not 0.0 <= t <= 1.0:
            raise InvalidInputError(reason=f"path parameter must lie in [0, 1], got {t}")
        segment = min(bisect.bisect_right(self.grid, t), len(self.grid) - 1)
        t0, t1 = self.grid[segment - 1], self.grid[segment]
        s = (t - t0) / (t1 - t0)
        if s == 0.0:
            return self.symbols[segment - 1]
        if s == 1.0:
            return self.symbols[segment]
        return self.symbols[segment - 1].combine(self.symbols[segment], s)

    def reversed(self) -> SymbolPath:
        """The same path run backwards, ``t -> 1 - t``."""
        grid = tuple(1.0 - t for t in reversed(self.grid))
        return SymbolPath(grid=grid, symbols=tuple(reversed(self.symbols)), delta=self.delta, tol=self.tol)

    def next_node(self, t: float) -> float:
        """The first grid node strictly after ``t``."""
        return self.grid[min(bisect.bisect_right(self.grid, t), len(self.grid) - 1)]


@dataclass(frozen=True, eq=False)
class SpectralCurve:
    """One tracked zero of ``det D_t``.

    Attributes:
        label: Order in which the curve was first seen along the path.
        multiplicity: Multiplicity carried along the curve.
        ts: Accepted path parameters.
        zs: Zero location at each parameter.
    """

    label: int
    multiplicity: int
    ts: npt.NDArray[np.float64]
    zs: npt.NDArray[np.complex128]

    def log_modulus(self) -> npt.NDArray[np.float64]:
        """``ln |z(t)|`` at every sample."""
        return np.log(np.abs(self.zs))

    def meets_annulus(self, r_min: float, r_max: float) -> bool:
        """Whether some sample lies in ``r_min < |z| < r_max``."""
        moduli = np.abs(self.zs)
        return bool(np.any((moduli > r_min) & (moduli < r_max)))


class CrossingEvent(BaseModel):
    """A spectral curve passing through the weight cylinder."""

    model_config = ConfigDict(frozen=True)

    t_star: float = Field(..., gt=0.0, lt=1.0, description="Path parameter of the crossing")
    z_star: JsonComplex = Field(..., description="Zero location at the crossing")
    sign: Literal[-1, 1] = Field(..., description="+1 leaving the disk, -1 entering it")
    d: int = Field(..., ge=1, description="Local d-value of the crossing zero")
    rate: float = Field(..., description="d/dt ln|z| at the crossing")


@dataclass(frozen=True, eq=False)
class FlowResult:
    """Spectral flow of a path.

    Attributes:
        sf: Sum of the event signs.
        events: Crossings ordered by ``t_star`` then ``arg z_star``.
        curves: The tracked spectral curves.
    """

    sf: int
    events: tuple[CrossingEvent, ...]
    curves: tuple[SpectralCurve, ...]


@dataclass(frozen=True)
class _TrackingBand:
    """The ``ln|z|`` range ``[lo, hi]`` in which curves must stay matched.

    Zeros within ``TRACKING_MARGIN`` outside the range are followed too, and
    only there may a curve begin or end.
    """

    lo: float
    hi: float

    @classmethod
    def around(cls, path: SymbolPath, annulus: tuple[float, float] | None, tol: ToleranceConfig) -> _TrackingBand:
        lo = path.delta - DEFAULTS.TRACKING_CORE
        hi = path.delta + DEFAULTS.TRACKING_CORE
        if annulus is not None:
            r_min, r_max = annulus
            if not 0.0 <= r_min < r_max:
                raise InvalidInputError(reason=f"annulus needs 0 <= r_min < r_max, got ({r_min}, {r_max})")
            lo = min(lo, math.log(max(r_min, 2.0 * tol.cluster_radius)))
            hi = max(hi, math.log(min(r_max, 0.5 * tol.infinite_modulus)))
        return cls(lo=lo, hi=hi)

    def holds(self, z: complex, margin: float = 0.0) -> bool:
        return self.lo - margin <= math.log(abs(z)) <= self.hi + margin


def _zeros_at(path: SymbolPath, t: float) -> ZeroSet:
    return path.symbol_at(t).nonzero_zeros()


def _zeros_near(path: SymbolPath, t: float, band: _TrackingBand) -> ZeroSet:
    return [(z, m) for z, m in _zeros_at(path, t) if band.holds(z, DEFAULTS.TRACKING_MARGIN)]


def _nearest_gaps(points: npt.NDArray[np.complex128]) -> npt.NDArray[np.float64]:
    """Distance from each point to its nearest neighbour; ``inf`` when alone."""
    if len(points) < 2:  # noqa: PLR2004
        return np.full(len(points), np.inf)
    gaps = np.abs(points[:, None] - points[None, :])
    np.fill_diagonal(gaps, np.inf)
    return np.min(gaps, axis=1)


def _match(current: ZeroSet, following: ZeroSet, band: _TrackingBand) -> list[int | None] | None:
    """Assignment ``current[i] -> following[order[i]]``, or ``None`` when ambiguous.

    Pairs touching the band need equal multiplicities, a jump below
    ``TRACKING_MAX_JUMP`` relative to ``|z|`` and below half the smallest
    neighbour gap among band zeros. Outside the band a pair failing those
    tests is left unmatched: one curve ends and another begins. A zero of the
    band left without a partner makes the match ambiguous.
    """
    old = np.array([z for z, _ in current], dtype=np.complex128)
    new = np.array([z for z, _ in following], dtype=np.complex128)
    old_core = [band.holds(z) for z, _ in current]
    new_core = [band.holds(z) for z, _ in following]
    old_gaps, new_gaps = _nearest_gaps(old), _nearest_gaps(new)
    core_gaps = [g for g, core in zip(old_gaps, old_core, strict=True) if core]
    core_gaps += [g for g, core in zip(new_gaps, new_core, strict=True) if core]
    gap = min(core_gaps, default=math.inf)
    order: list[int | None] = [None] * len(current)
    paired: set[int] = set()
    if current and following:
        cost = np.abs(old[:, None] - new[None, :])
        rows, cols = linear_sum_assignment(cost)
        for row, col in zip(rows.tolist(), cols.tolist(), strict=True):
            jump = float(cost[row, col])
            same = current[row][1] == following[col][1] and jump < DEFAULTS.TRACKING_MAX_JUMP * abs(old[row])
            if old_core[row] or new_core[col]:
                if not same or jump >= gap / 2.0:
                    return None
            elif not same or jump >= min(old_gaps[row], new_gaps[col]) / 2.0:
                continue
            order[row] = col
            paired.add(col)
    if any(core and slot is None for core, slot in zip(old_core, order, strict=True)):
        return None
    if any(core and col not in paired for col, core in enumerate(new_core)):
        return None
    return order


def track_spectral_curves(
    path: SymbolPath,
    annulus: tuple[float, float] | None = None,
    tol: ToleranceConfig | None = None,
    *,
    logger: Logger | None = None,
) -> list[SpectralCurve]:
    """Follow the zeros of ``det D_t`` near the weight cylinder from ``t = 0`` to ``t = 1``.

    Only zeros with ``ln|z|`` within ``TRACKING_CORE`` of ``delta`` (widened
    to cover ``annulus`` when given) must stay matched. Zeros slightly beyond
    that band are followed as well, and curves start or stop there, so zeros
    escaping to infinity or to the origin far from the cylinder do not stall
    the tracker. Steps start at ``PATH_MAX_STEP``, never straddle a grid node,
    and are halved until the assignment is unambiguous.

    Args:
        path: The symbol path.
        annulus: Also keep every curve through ``r_min < |z| < r_max`` matched,
            and return only curves entering it; all tracked curves when omitted.
        tol: Tolerances; the path's own when omitted.
        logger: Structured logger.

    Raises:
        InvalidInputError: If the annulus radii are not ordered.
        TrackingCollisionError: If the step falls below ``PATH_MIN_STEP``.
    """
    tol = tol or path.tol
    curves = _follow(path, _TrackingBand.around(path, annulus, tol), logger or default_logger(__name__))
    if annulus is not None:
        curves = [curve for curve in curves if curve.meets_annulus(*annulus)]
    return curves


def _follow(path: SymbolPath, band: _TrackingBand, logger: Logger) -> list[SpectralCurve]:
    current = _zeros_near(path, 0.0, band)
    samples: list[list[tuple[float, complex]]] = [[(0.0, z)] for z, _ in current]
    multiplicities = [multiplicity for _, multiplicity in current]
    active = list(range(len(current)))
    t = 0.0
    step = DEFAULTS.PATH_MAX_STEP
    while t < 1.0:
        while True:
            t_next = min(t + step, path.next_node(t))
            following = _zeros_near(path, t_next, band)
            order = _match(current, following, band)
            if order is not None:
                break
            step /= 2.0
            if step < DEFAULTS.PATH_MIN_STEP:
                raise TrackingCollisionError(t_start=t, t_end=t + 2.0 * step)
        successors: list[int | None] = [None] * len(following)
        for slot, col in enumerate(order):
            if col is not None:
                successors[col] = active[slot]
        for col, (z, multiplicity) in enumerate(following):
            curve = successors[col]
            if curve is None:
                curve = len(samples)
                samples.append([])
                multiplicities.append(multiplicity)
                successors[col] = curve
            samples[curve].append((t_next, z))
        active = [curve for curve in successors if curve is not None]
        current = following
        t = t_next
        step = min(2.0 * step, DEFAULTS.PATH_MAX_STEP)
    curves = [
        SpectralCurve(
            label=label,
            multiplicity=multiplicities[label],
            ts=np.array([s for s, _ in points], dtype=np.float64),
            zs=np.array([z for _, z in points], dtype=np.complex128),
        )
        for label, points in enumerate(samples)
    ]
    logger.debug("spectral_curves_tracked", curves=len(curves), band=(band.lo, band.hi))
    return curves


def _zero_near(path: SymbolPath, t: float, guess: complex) -> complex:
    zeros = _zeros_at(path, t)
    return min((z for z, _ in zeros), key=lambda z: abs(z - guess))


def _locate_crossing(path: SymbolPath, curve: SpectralCurve, i: int) -> tuple[float, complex]:
    """Bisect ``ln|z(t)| - delta`` on the accepted step ``[ts[i], ts[i+1]]``."""
    t_lo, t_hi = float(curve.ts[i]), float(curve.ts[i + 1])
    z_lo, z_hi = complex(curve.zs[i]), complex(curve.zs[i + 1])
    a_lo = math.log(abs(z_lo)) - path.delta
    z_mid = z_lo
    while t_hi - t_lo > DEFAULTS.CROSSING_TOL:
        t_mid = 0.5 * (t_lo + t_hi)
        z_mid = _zero_near(path, t_mid, 0.5 * (z_lo + z_hi))
        a_mid = math.log(abs(z_mid)) - path.delta
        if abs(a_mid) < DEFAULTS.CROSSING_TOL:
            return t_mid, z_mid
        if (a_mid < 0.0) == (a_lo < 0.0):
            t_lo, z_lo, a_lo = t_mid, z_mid, a_mid
        else:
            t_hi, z_hi = t_mid, z_mid
    return 0.5 * (t_lo + t_hi), z_mid


def _crossing_rate(path: SymbolPath, t_star: float, z_star: complex) -> float:
    """Central difference of ``ln|z(t)|`` at the crossing, one-sided near the ends."""
    h = DEFAULTS.DERIVATIVE_STEP
    t_minus = max(0.0, t_star - h)
    t_plus = min(1.0, t_star + h)
    a_minus = math.log(abs(_zero_near(path, t_minus, z_star)))
    a_plus = math.log(abs(_zero_near(path, t_plus, z_star)))
    return (a_plus - a_minus) / (t_plus - t_minus)


def spectral_flow(
    path: SymbolPath,
    tol: ToleranceConfig | None = None,
    *,
    annulus: tuple[float, float] | None = None,
    logger: Logger | None = None,
) -> FlowResult:
    """Spectral flow of a symbol path through the cylinder ``|z| = e^delta``.

    Crossings are found on the tracked curves, located by bisection on
    ``ln|z(t)| - delta`` to ``CROSSING_TOL`` and signed by the rate
    ``d/dt ln|z|``.

    Args:
        path: The symbol path.
        tol: Tolerances; the path's own when omitted.
        annulus: Widen tracking to ``r_min < |z| < r_max`` and return only the
            curves entering it. The flow itself does not depend on it.
        logger: Structured logger.

    Returns:
        The flow, its events and the curves behind them.

    Raises:
        TrackingCollisionError: If curves cannot be told apart.
        TangentialCrossingError: If ``|rate|`` at a crossing is below ``zero_guard``.
        DegenerateCrossingError: If a crossing zero has ``d > 1``.

    Example:
        >>> from hother.perispec.endperiodic.symbol import LaurentSymbol
        >>> start = LaurentSymbol.from_blocks({0: [[-0.5]], 1: [[1.0]]})
        >>> end = LaurentSymbol.from_blocks({0: [[-1.5]], 1: [[1.0]]})
        >>> spectral_flow(SymbolPath.linear(start, end)).sf
        1
    """
    tol = tol or path.tol
    logger = logger or default_logger(__name__)
    curves = _follow(path, _TrackingBand.around(path, annulus, tol), logger)
    events: list[CrossingEvent] = []
    for curve in curves:
        offsets = curve.log_modulus() - path.delta
        for i in range(len(offsets) - 1):
            if (offsets[i] < 0.0) == (offsets[i + 1] < 0.0):
                continue
            t_star, z_star = _locate_crossing(path, curve, i)
            rate = _crossing_rate(path, t_star, z_star)
            if abs(rate) < tol.zero_guard:
                raise TangentialCrossingError(t_star=t_star, rate=rate)
            d = path.symbol_at(t_star).det_multiplicity(z_star) or curve.multiplicity
            if d > 1:
                raise DegenerateCrossingError(t_star=t_star, d=d)
            event = CrossingEvent(t_star=t_star, z_star=z_star, sign=1 if rate > 0 else -1, d=d, rate=rate)
            logger.debug("crossing_located", t_star=t_star, z_star=z_star, sign=event.sign, rate=rate)
            events.append(event)
    events.sort(key=lambda event: (event.t_star, float(np.angle(event.z_star))))
    sf = sum(event.sign for event in events)
    if annulus is not None:
        curves = [curve for curve in curves if curve.meets_annulus(*annulus)]
    return FlowResult(sf=sf, events=tuple(events), curves=tuple(curves))
