"""Exact toolkit for CW complexes with even 2-skeleton.

Graphs, walks, and even complexes with exact integer homology; chromatic
and circular chromatic bounds with certificates; walk homotopy under
backtrack and bounded-substitution moves; and circular covers with walk
lifting and winding numbers.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401
