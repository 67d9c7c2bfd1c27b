"""Hermite expansions, Poisson polynomials and phase-space norms."""

from ._hermspace import *  # noqa: F401,F403
from ._hermspace import __version__  # noqa: F401
