"""Exact exterior calculus for generalized Poisson, Nambu, Jacobi and Dirac brackets."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
