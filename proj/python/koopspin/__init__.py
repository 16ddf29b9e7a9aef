"""Dissipative spin-chain simulation and reduced-rank Koopman analysis."""

from koopspin._core import *  # noqa: F401,F403
from koopspin._core import __doc__  # noqa: F401
