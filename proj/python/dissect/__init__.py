"""Exact counts of polygon dissections up to rotation and reflection."""

from ._core import *  # noqa: F401,F403
from ._core import CapacityError, ReconciliationError, __doc__  # noqa: F401
