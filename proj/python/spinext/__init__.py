"""Python bindings for the spinext C++ core.

Forms and spin structures are passed as bit strings (index 0 first);
matrices are lists of row strings.
"""

from ._spinext import *  # noqa: F401,F403
from ._spinext import SpinextError  # noqa: F401

__version__ = "0.1.0"
