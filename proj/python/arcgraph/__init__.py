"""Arc graphs, the right adjoint, ideal lattices and exact colouring/width solvers."""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
