"""Run configuration and exit codes for the ``perispec`` command."""

from __future__ import annotations

from contextlib import contextmanager
from enum import IntEnum
from pathlib import Path
from typing import TYPE_CHECKING, Self

import typer
from pydantic import BaseModel, ConfigDict, Field, model_validator

from hother.perispec.core.exceptions import (
    BoundaryProximityError,
    DegenerateSeifertError,
    InvalidInputError,
    IrregularEndpointError,
    NonCoprimeError,
    NotFredholmError,
    PerispecError,
    SingularPencilError,
    WindingResolutionError,
)
from hother.perispec.numerics.tolerance import DEFAULT_TOLERANCE, ToleranceConfig

if TYPE_CHECKING:
    from collections.abc import Iterator

THREADS_ENVVAR = "PERISPEC_THREADS"
RANDOMIZED_COMMANDS = frozenset({"ep sweep"})


class ExitCode(IntEnum):
    """Process exit codes."""

    OK = 0
    CHECK_FAILED = 1
    BAD_INPUT = 2
    SINGULAR_PENCIL = 3
    NOT_FREDHOLM = 4
    NUMERICAL = 5


_EXIT_CODES: tuple[tuple[type[BaseException], ExitCode], ...] = (
    (InvalidInputError, ExitCode.BAD_INPUT),
    (NonCoprimeError, ExitCode.BAD_INPUT),
    (DegenerateSeifertError, ExitCode.BAD_INPUT),
    (FileNotFoundError, ExitCode.BAD_INPUT),
    (IsADirectoryError, ExitCode.BAD_INPUT),
    (SingularPencilError, ExitCode.SINGULAR_PENCIL),
    (NotFredholmError, ExitCode.NOT_FREDHOLM),
    (BoundaryProximityError, ExitCode.NOT_FREDHOLM),
    (IrregularEndpointError, ExitCode.NOT_FREDHOLM),
    (WindingResolutionError, ExitCode.NOT_FREDHOLM),
)


def exit_code_for(exc: BaseException) -> ExitCode:
    """Map an exception to its exit code; unlisted numerical failures give 5."""
    for kind, code in _EXIT_CODES:
        if isinstance(exc, kind):
            return code
    return ExitCode.NUMERICAL


@contextmanager
def handled_errors() -> Iterator[None]:
    """Turn library and file errors into a one-line message on stderr and an exit code."""
    try:
        yield
    except (PerispecError, FileNotFoundError, IsADirectoryError) as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(code=exit_code_for(exc)) from exc


class RunConfig(BaseModel):
    """Everything one CLI invocation needs besides its command-specific options."""

    model_config = ConfigDict(frozen=True)

    command: str = Field(..., description="Command path, e.g. 'ep index'")
    inputs: tuple[Path, ...] = Field(default=(), description="Input documents, the main one first")
    output: Path | None = Field(default=None, description="Output file, when the command writes one")
    tolerance: ToleranceConfig = Field(default=DEFAULT_TOLERANCE)
    threads: int = Field(default=1, ge=1, description="Worker processes for sweeps")
    seed: int | None = Field(default=None, ge=0, description="Seed for randomized commands")

    @model_validator(mode="after")
    def _require_seed(self) -> Self:
        if self.command in RANDOMIZED_COMMANDS and self.seed is None:
            msg = f"'{self.command}' is randomized and needs --seed"
            raise ValueError(msg)
        return self

    @property
    def required_seed(self) -> int:
        """The seed of a randomized command."""
        if self.seed is None:
            raise InvalidInputError(reason=f"'{self.command}' was given no seed")
        return self.seed


def tolerance_of(ctx: typer.Context) -> ToleranceConfig:
    """The tolerance configured by the top-level options."""
    obj: object = ctx.find_root().obj
    return obj if isinstance(obj, ToleranceConfig) else DEFAULT_TOLERANCE
