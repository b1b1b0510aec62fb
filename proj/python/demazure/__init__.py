"""Exact Weyl group combinatorics and Demazure operators on character rings.

Characters are dicts mapping weight tuples (fundamental-weight coordinates)
to integer coefficients; words are lists of 1-based generator letters.
"""

from ._core import RootDatum

__all__ = ["RootDatum"]
__version__ = "0.1.0"
