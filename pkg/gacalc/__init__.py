# gacalc/__init__.py
"""Degenerate Clifford algebras, the Playfair decomposition and PGA3."""

from .clifford_core import CliffordAlgebra, Multivector
from .errors import GacalcError
from .quadratic_space import Complement, QuadraticForm
from .scalars import ScalarMode

__all__ = ["CliffordAlgebra", "Complement", "GacalcError", "Multivector", "QuadraticForm", "ScalarMode"]
__version__ = "1.0.0"
