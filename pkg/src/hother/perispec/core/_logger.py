"""Logger protocol for perispec.

Library code never configures logging. Every computation that reports
progress accepts an optional ``logger`` and falls back to
:func:`default_logger`; structlog and loguru loggers can be passed directly.
"""

from __future__ import annotations

import logging
from typing import Any, Protocol, runtime_checkable


@runtime_checkable
class Logger(Protocol):
    """The three levels perispec logs at, each taking keyword fields.

    Example with structlog:
        >>> import structlog
        >>> from hother.perispec.endperiodic import truncation_kernels
        >>> truncation_kernels(operator, logger=structlog.get_logger("perispec"))
    """

    def debug(self, event: str, **fields: Any) -> Any:
        """Log a computation step."""
        ...

    def info(self, event: str, **fields: Any) -> Any:
        """Log the start or end of a sweep."""
        ...

    def warning(self, event: str, **fields: Any) -> Any:
        """Log a failed check."""
        ...


class StdlibLoggerAdapter:
    """Gives a stdlib logger the ``logger.debug("event", key=value)`` convention.

    Fields are rendered as ``event | key=value ...`` in sorted key order and
    also passed as ``extra`` for handlers that read records.

    Example:
        >>> adapter = StdlibLoggerAdapter(logging.getLogger("perispec.demo"))
        >>> adapter.info("truncation_stabilized", sites=128, ker_dim=0)
    """

    def __init__(self, logger: logging.Logger) -> None:
        self._logger = logger

    @staticmethod
    def _format_message(event: str, **fields: Any) -> str:
        if not fields:
            return event
        rendered = " ".join(f"{key}={value}" for key, value in sorted(fields.items()))
        return f"{event} | {rendered}"

    def _log(self, level: str, event: str, fields: dict[str, Any]) -> None:
        emit = getattr(self._logger, level)
        message = self._format_message(event, **fields)
        if fields:
            emit(message, extra=fields)
        else:
            emit(message)

    def debug(self, event: str, **fields: Any) -> None:
        self._log("debug", event, fields)

    def info(self, event: str, **fields: Any) -> None:
        self._log("info", event, fields)

    def warning(self, event: str, **fields: Any) -> None:
        self._log("warning", event, fields)


def default_logger(name: str) -> Logger:
    """Adapter over ``logging.getLogger(name)``, used when a caller passes no logger."""
    return StdlibLoggerAdapter(logging.getLogger(name))
