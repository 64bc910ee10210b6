"""Exact Maurer-Cartan calculus on truncated free graded Lie algebras."""

from ._liemc import *  # noqa: F401,F403
from ._liemc import __doc__  # noqa: F401
