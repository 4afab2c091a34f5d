"""Seeded change-of-index verification over random Laurent symbols.

Every instance draws its own generator from ``(seed, instance)``, so a sweep
gives the same verdicts whether it runs in one process or many.
"""

from __future__ import annotations

import math
from functools import partial
from typing import TYPE_CHECKING

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field

from hother.perispec.core._logger import default_logger
from hother.perispec.core.exceptions import PerispecError
from hother.perispec.core.parallel import ordered_map
from hother.perispec.endperiodic.operator import EndPeriodicOperator, index, index_change, truncation_kernels
from hother.perispec.endperiodic.sampling import random_symbol
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE

if TYPE_CHECKING:
    from hother.perispec.core._logger import Logger
    from hother.perispec.numerics.tolerance import ToleranceConfig

SWEEP_GUARD_FRACTION = 0.15


def sweep_guard(delta: float, delta2: float, tol: ToleranceConfig | None = None) -> float:
    """Log-distance kept between sampled zeros and both weight circles.

    A fixed share of the gap between the circles, never below ``zero_guard``.
    """
    tol = tol or DEFAULT_TOLERANCE
    return max(tol.zero_guard, SWEEP_GUARD_FRACTION * abs(delta2 - delta))


class IndexChangeCheck(BaseModel):
    """The three index-change readings of one random symbol."""

    model_config = ConfigDict(frozen=True)

    instance: int = Field(..., ge=0)
    index_delta: int | None = Field(default=None, description="index at the first weight")
    index_delta2: int | None = Field(default=None, description="index at the second weight")
    index_change: int | None = Field(default=None, description="Sum of d over the zeros between the circles")
    truncation_difference: int | None = Field(default=None, description="Difference of truncated indices")
    error: str | None = Field(default=None, description="Why the instance could not be evaluated")

    @computed_field
    @property
    def passed(self) -> bool:
        """All three readings present and equal."""
        if self.error is not None or self.index_delta is None or self.index_delta2 is None:
            return False
        difference = self.index_delta - self.index_delta2
        return difference == self.index_change == self.truncation_difference


class IndexChangeSweep(BaseModel):
    """Outcome of a seeded sweep."""

    model_config = ConfigDict(frozen=True)

    seed: int
    delta: float
    delta2: float
    guard: float = Field(..., gt=0.0, description="Log-distance kept between sampled zeros and the weight circles")
    checks: tuple[IndexChangeCheck, ...]

    @computed_field
    @property
    def passed_count(self) -> int:
        """Instances on which every reading agrees."""
        return sum(1 for check in self.checks if check.passed)

    @computed_field
    @property
    def all_passed(self) -> bool:
        """Whether every instance agrees."""
        return self.passed_count == len(self.checks)


def check_index_change(
    instance: int,
    *,
    seed: int,
    delta: float,
    delta2: float,
    block_size: int = 1,
    band: int = 1,
    guard: float | None = None,
) -> IndexChangeCheck:
    """Draw one symbol clear of both weight circles and compare the three readings.

    The difference ``index(delta) - index(delta2)``, :func:`index_change` and
    the difference of truncated indices must coincide. ``guard`` defaults to
    :func:`sweep_guard`.
    """
    rng = np.random.default_rng([seed, instance])
    guard = sweep_guard(delta, delta2) if guard is None else guard
    try:
        symbol = random_symbol(
            rng,
            block_size=block_size,
            k_min=-band,
            k_max=band,
            avoid_radii=(math.exp(delta), math.exp(delta2)),
            guard=guard,
        )
        first = EndPeriodicOperator(symbol=symbol, delta=delta)
        second = first.with_weight(delta2)
        return IndexChangeCheck(
            instance=instance,
            index_delta=index(first),
            index_delta2=index(second),
            index_change=index_change(symbol, delta, delta2),
            truncation_difference=truncation_kernels(first).index - truncation_kernels(second).index,
        )
    except PerispecError as exc:
        return IndexChangeCheck(instance=instance, error=str(exc))


def index_change_sweep(
    seed: int,
    count: int,
    *,
    delta: float,
    delta2: float,
    block_size: int = 1,
    band: int = 1,
    guard: float | None = None,
    threads: int = 1,
    logger: Logger | None = None,
) -> IndexChangeSweep:
    """Run :func:`check_index_change` on instances ``0 .. count - 1``.

    Disagreements are findings: they are logged as ``index_change_mismatch``
    and returned, never raised.
    """
    log = logger or default_logger(__name__)
    guard = sweep_guard(delta, delta2) if guard is None else guard
    check = partial(
        check_index_change, seed=seed, delta=delta, delta2=delta2, block_size=block_size, band=band, guard=guard
    )
    checks = ordered_map(check, list(range(count)), threads=threads)
    for result in checks:
        if not result.passed:
            log.warning("index_change_mismatch", instance=result.instance, seed=seed, error=result.error)
    return IndexChangeSweep(seed=seed, delta=delta, delta2=delta2, guard=guard, checks=tuple(checks))
