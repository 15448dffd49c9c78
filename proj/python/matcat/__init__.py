"""Tensor categories rebuilt from (R, A, phi, a) data.

Matrices, specs and witnesses are passed as JSON strings in the CLI format.
"""

from ._matcat import *  # noqa: F401,F403
from ._matcat import ParseError, Quadruple  # noqa: F401
