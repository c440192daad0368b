"""Lifting of elliptic problems on R^(n d) to parabolic problems on R^d x (0, inf)."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, cli_run

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
