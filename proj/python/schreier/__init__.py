"""Finite monoid fibrations, lax actions and Schreier extensions."""

from ._core import *  # noqa: F401,F403
from ._core import SchreierError, SizeLimitError  # noqa: F401
