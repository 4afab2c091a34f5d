"""Seeded random symbols, operators, caps and paths for sweeps and tests.

Every sampler draws from a caller-supplied ``numpy.random.Generator`` and
rejects draws with a zero of ``det D`` within ``guard`` (in ``ln |z|``) of the
circles it is asked to avoid.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np

from hother.perispec.core.exceptions import InvalidInputError
from hother.perispec.endperiodic.flow import SymbolPath
from hother.perispec.endperiodic.operator import CapEntry, EndPeriodicOperator
from hother.perispec.endperiodic.symbol import LaurentSymbol

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable

    from hother.perispec.numerics.linalg import ComplexMatrix

DEFAULT_GUARD = 0.2
MAX_ATTEMPTS = 10_000


def _complex_normal(rng: np.random.Generator, shape: tuple[int, ...]) -> ComplexMatrix:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2.0)


def _clear_of(symbol: LaurentSymbol, radii: Iterable[float], guard: float) -> bool:
    logs = [math.log(radius) for radius in radii]
    return all(abs(math.log(abs(z)) - log_radius) > guard for z, _ in symbol.nonzero_zeros() for log_radius in logs)


def _rejection_sample(draw: Callable[[], LaurentSymbol], radii: tuple[float, ...], guard: float) -> LaurentSymbol:
    for _ in range(MAX_ATTEMPTS):
        symbol = draw()
        if _clear_of(symbol, radii, guard):
            return symbol
    raise InvalidInputError(reason=f"no symbol clear of radii {radii} within {MAX_ATTEMPTS} draws")


def random_symbol(
    rng: np.random.Generator,
    *,
    block_size: int = 1,
    k_min: int = -1,
    k_max: int = 1,
    avoid_radii: Iterable[float] = (1.0,),
    guard: float = DEFAULT_GUARD,
) -> LaurentSymbol:
    """A Laurent symbol with complex Gaussian blocks ``D_{k_min}, ..., D_{k_max}``.

    Raises:
        InvalidInputError: If the power range misses 0 or no clear draw is found.
    """
    if not k_min <= 0 <= k_max:
        raise InvalidInputError(reason=f"power range [{k_min}, {k_max}] must contain 0")
    count = k_max - k_min + 1

    def draw() -> LaurentSymbol:
        blocks = _complex_normal(rng, (count, block_size, block_size))
        return LaurentSymbol(k_min=k_min, coefficients=tuple(blocks))

    return _rejection_sample(draw, tuple(avoid_radii), guard)


def random_cap(rng: np.random.Generator, *, block_size: int, cap_size: int, entries: int) -> tuple[CapEntry, ...]:
    """``entries`` random block overrides at sites below ``cap_size``."""
    if cap_size < 1:
        return ()
    cap: list[CapEntry] = []
    for _ in range(entries):
        row, col = (int(site) for site in rng.integers(0, cap_size, size=2))
        cap.append(CapEntry(row=row, col=col, block=_complex_normal(rng, (block_size, block_size))))
    return tuple(cap)


def random_fredholm_operator(
    rng: np.random.Generator,
    *,
    delta: float = 0.0,
    block_size: int = 1,
    k_min: int = -1,
    k_max: int = 1,
    cap_size: int = 0,
    cap_entries: int = 0,
    guard: float = DEFAULT_GUARD,
) -> EndPeriodicOperator:
    """A random operator whose symbol has no zero near ``|z| = e^delta``."""
    symbol = random_symbol(
        rng, block_size=block_size, k_min=k_min, k_max=k_max, avoid_radii=(math.exp(delta),), guard=guard
    )
    cap = random_cap(rng, block_size=block_size, cap_size=cap_size, entries=cap_entries)
    return EndPeriodicOperator(symbol=symbol, delta=delta, cap=cap)


def random_monic_symbol(
    rng: np.random.Generator, *, block_size: int = 1, degree: int = 1, spread: float = 1.0
) -> LaurentSymbol:
    """``D(z) = z^degree I + sum_{k < degree} C_k z^k`` with Gaussian ``C_k`` of scale ``spread``.

    A monic leading block keeps every zero finite along straight-line
    interpolation, so such symbols make well-posed path endpoints.
    """
    lower = spread * _complex_normal(rng, (degree, block_size, block_size))
    identity = np.eye(block_size, dtype=np.complex128)
    return LaurentSymbol(k_min=0, coefficients=(*lower, identity))


def random_path(
    rng: np.random.Generator,
    *,
    block_size: int = 1,
    degree: int = 1,
    nodes: int = 2,
    delta: float = 0.0,
    guard: float = DEFAULT_GUARD,
    monic: bool = True,
) -> SymbolPath:
    """A piecewise-linear path of polynomial symbols on an equispaced grid.

    Only the endpoint symbols are kept clear of ``|z| = e^delta``; interior
    nodes are unconstrained, so the path generally crosses the cylinder.

    With ``monic=False`` every block is Gaussian and the interior nodes lose
    their leading block, so zeros escape to infinity at each interior node and
    return from it.
    """
    if nodes < 2:  # noqa: PLR2004
        raise InvalidInputError(reason=f"a path needs at least 2 nodes, got {nodes}")
    radius = math.exp(delta)

    def draw() -> LaurentSymbol:
        if monic:
            return random_monic_symbol(rng, block_size=block_size, degree=degree, spread=radius)
        blocks = _complex_normal(rng, (degree + 1, block_size, block_size))
        scaled = tuple(block * radius ** (degree - k) for k, block in enumerate(blocks))
        return LaurentSymbol(k_min=0, coefficients=scaled)

    def interior() -> LaurentSymbol:
        symbol = draw()
        if monic:
            return symbol
        leading = np.zeros((block_size, block_size), dtype=np.complex128)
        return LaurentSymbol(k_min=0, coefficients=(*symbol.coefficients[:-1], leading))

    start = _rejection_sample(draw, (radius,), guard)
    middle = [interior() for _ in range(nodes - 2)]
    end = _rejection_sample(draw, (radius,), guard)
    grid = tuple(float(t) for t in np.linspace(0.0, 1.0, nodes))
    return SymbolPath(grid=grid, symbols=(start, *middle, end), delta=delta)
