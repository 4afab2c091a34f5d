"""Allow ``python -m hother.perispec.cli``."""

from hother.perispec.cli.app import app

if __name__ == "__main__":
    app()
