"""Command-line front end: ``perispec family``, ``perispec ep ...`` and ``perispec seifert ...``."""

from hother.perispec.cli.app import app

__all__ = ["app"]
