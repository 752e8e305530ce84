"""Ancestor-distinct coloring of rooted trees."""

from ._treecolor import *  # noqa: F401,F403
from ._treecolor import ParseError, BudgetExceeded, RootedTree  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
