"""Cayley-Purser and Slavin matrix cryptosystems, and the attacks that break them."""

from .matrix import FactorFound, LinSystem, Mat2, NoUnit, NullspaceResult, nullspace
from .ringmath import NotInvertible

__all__ = ["FactorFound", "LinSystem", "Mat2", "NoUnit", "NotInvertible", "NullspaceResult", "nullspace"]
