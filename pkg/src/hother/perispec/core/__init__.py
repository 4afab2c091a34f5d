"""Shared plumbing: logging protocol, exceptions, numeric defaults, parallel map."""

from hother.perispec.core._logger import Logger, StdlibLoggerAdapter, default_logger
from hother.perispec.core.constants import DEFAULTS, NumericDefaults
from hother.perispec.core.exceptions import PerispecError
from hother.perispec.core.parallel import ordered_map

__all__ = [
    "DEFAULTS",
    "Logger",
    "NumericDefaults",
    "PerispecError",
    "StdlibLoggerAdapter",
    "default_logger",
    "ordered_map",
]
