"""Mixed graphs of small diameter."""

from ._core import *  # noqa: F401,F403
from ._core import MixedMooreError, MixedGraph

__all__ = [name for name in dir() if not name.startswith("_")]
