"""Sweeps over ranges of Seifert homology spheres.

:func:`check_barmu` tests the identity ``eta_dir/2 + eta_sign/8 = -mu_bar`` on
every instance of a range. A mismatch is a finding: it is recorded in the
returned :class:`BarmuReport` together with the full invariant dump, never
raised.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import TYPE_CHECKING

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator

from hother.perispec.core._logger import default_logger
from hother.perispec.core.documents import write_csv_table
from hother.perispec.core.exceptions import PerispecError
from hother.perispec.core.parallel import ordered_map
from hother.perispec.numerics.rational import JsonRational
from hother.perispec.seifert.data import SeifertData
from hother.perispec.seifert.invariants import InvariantReport, eta_invariants, invariant_report, mu_bar

if TYPE_CHECKING:
    from collections.abc import Iterable
    from typing import TextIO

    from hother.perispec.core._logger import Logger

SWEEP_HEADER = (
    "multiplicities",
    "chi",
    "vortex_count",
    "casson",
    "mu_bar",
    "eta_combo",
    "lambda_sw_product",
    "lambda_sw_conjugation",
    "rohlin_parity_ok",
)


class SeifertRange(BaseModel):
    """Three-fiber spheres up to a product bound, plus explicit extra instances."""

    model_config = ConfigDict(frozen=True)

    max_product: int = Field(..., ge=0, description="Upper bound on a_1 * a_2 * a_3")
    extra: tuple[tuple[int, ...], ...] = Field(default=(), description="Additional multiplicity tuples")

    @field_validator("extra")
    @classmethod
    def _check_extra(cls, value: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        for multiplicities in value:
            SeifertData(multiplicities=multiplicities).require_genuine()
        return value


def enumerate_instances(seifert_range: SeifertRange) -> list[SeifertData]:
    """Sorted pairwise-coprime ``2 <= a_1 < a_2 < a_3`` with ``a_1 a_2 a_3 <= max_product``, then the extras.

    Duplicates among the extras are dropped; order is deterministic.

    Example:
        >>> [s.multiplicities for s in enumerate_instances(SeifertRange(max_product=42))]
        [(2, 3, 5), (2, 3, 7)]
    """
    found: list[SeifertData] = []
    bound = seifert_range.max_product
    a1 = 2
    while a1 * (a1 + 1) * (a1 + 2) <= bound:
        a2 = a1 + 1
        while a1 * a2 * (a2 + 1) <= bound:
            if gcd(a1, a2) == 1:
                for a3 in range(a2 + 1, bound // (a1 * a2) + 1):
                    if gcd(a1, a3) == 1 and gcd(a2, a3) == 1:
                        found.append(SeifertData.of(a1, a2, a3))
            a2 += 1
        a1 += 1
    seen = {s.multiplicities for s in found}
    for multiplicities in seifert_range.extra:
        instance = SeifertData(multiplicities=multiplicities)
        if instance.multiplicities not in seen:
            seen.add(instance.multiplicities)
            found.append(instance)
    return found


class BarmuVerdict(BaseModel):
    """Outcome of the eta/mu-bar comparison on one instance."""

    model_config = ConfigDict(frozen=True)

    multiplicities: tuple[int, ...]
    combo: JsonRational = Field(..., description="eta_dir/2 + eta_sign/8")
    negated_mu_bar: int = Field(..., description="-mu_bar")
    passed: bool
    report: InvariantReport | None = Field(default=None, description="Full invariant dump, kept for failures")
    error: str | None = Field(default=None, description="Why the dump could not be computed")


class BarmuReport(BaseModel):
    """Per-instance verdicts of a sweep, in enumeration order."""

    model_config = ConfigDict(frozen=True)

    verdicts: tuple[BarmuVerdict, ...]

    @computed_field
    @property
    def total(self) -> int:
        """Number of instances checked."""
        return len(self.verdicts)

    @computed_field
    @property
    def passed_count(self) -> int:
        """Number of instances where the identity holds."""
        return sum(1 for verdict in self.verdicts if verdict.passed)

    @property
    def failures(self) -> list[BarmuVerdict]:
        """Verdicts that did not pass."""
        return [verdict for verdict in self.verdicts if not verdict.passed]

    @computed_field
    @property
    def all_passed(self) -> bool:
        """Whether every instance passed."""
        return self.passed_count == self.total


def check_instance(s: SeifertData) -> BarmuVerdict:
    """Compare ``eta_dir/2 + eta_sign/8`` with ``-mu_bar`` exactly for one instance."""
    combo = eta_invariants(s).combo
    negated = -mu_bar(s)
    passed = combo == Fraction(negated)
    if passed:
        return BarmuVerdict(multiplicities=s.multiplicities, combo=combo, negated_mu_bar=negated, passed=True)
    try:
        dump: InvariantReport | None = invariant_report(s)
        error = None
    except PerispecError as exc:
        dump, error = None, str(exc)
    return BarmuVerdict(
        multiplicities=s.multiplicities,
        combo=combo,
        negated_mu_bar=negated,
        passed=False,
        report=dump,
        error=error,
    )


def check_barmu(seifert_range: SeifertRange, *, threads: int = 1, logger: Logger | None = None) -> BarmuReport:
    """Run :func:`check_instance` over the whole range.

    The verdict order is the enumeration order whatever ``threads`` is.

    Example:
        >>> report = check_barmu(SeifertRange(max_product=2000, extra=((2, 3, 5, 7),)))
        >>> report.all_passed
        True
    """
    log = logger or default_logger(__name__)
    instances = enumerate_instances(seifert_range)
    log.info("barmu_sweep_started", instances=len(instances), threads=threads)
    verdicts = ordered_map(check_instance, instances, threads=threads)
    for verdict in verdicts:
        if not verdict.passed:
            log.warning(
                "barmu_mismatch",
                multiplicities=verdict.multiplicities,
                combo=str(verdict.combo),
                negated_mu_bar=verdict.negated_mu_bar,
            )
    report = BarmuReport(verdicts=tuple(verdicts))
    log.info("barmu_sweep_finished", total=report.total, passed=report.passed_count)
    return report


def invariant_sweep(seifert_range: SeifertRange, *, threads: int = 1) -> list[InvariantReport]:
    """Full invariant reports for every instance of the range, in enumeration order."""
    return ordered_map(invariant_report, enumerate_instances(seifert_range), threads=threads)


def sweep_rows(reports: Iterable[InvariantReport]) -> list[tuple[object, ...]]:
    """Rows of the sweep CSV table, columns as in :data:`SWEEP_HEADER`."""
    return [
        (
            " ".join(str(a) for a in report.multiplicities),
            str(report.chi),
            report.vortex_count,
            report.casson,
            report.mu_bar,
            str(report.etas.combo),
            report.lambda_sw_product,
            report.lambda_sw_conjugation,
            str(report.rohlin_parity_ok).lower(),
        )
        for report in reports
    ]


def write_sweep_csv(reports: Iterable[InvariantReport], handle: TextIO) -> None:
    """Write the versioned sweep table to an open text handle."""
    write_csv_table(handle, "seifert-sweep", SWEEP_HEADER, sweep_rows(reports))
