"""Matroids, positroids and rank-2 chirotopes on at most 16 elements.

Element sets cross the boundary as ``frozenset[int]``; any iterable of ints is
accepted on input. Library failures raise ``positroidkit.Error`` (a
``ValueError``).
"""

from ._core import *  # noqa: F401,F403
from ._core import Error, Matroid, Chirotope

__all__ = [name for name in dir() if not name.startswith("_")]
