# gacalc/errors.py

from typing import FrozenSet, Optional


class GacalcError(ValueError):
    """Base class for every error raised by the library."""


class ConfigError(GacalcError):
    pass


class ScalarModeError(GacalcError):
    pass


class DimensionMismatch(GacalcError):
    pass


class AlgebraMismatch(GacalcError):
    pass


class NotRadical(GacalcError):
    """A subspace that is not radical; `witness` is a pair (u, w) with B(u, w) != 0."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidComplement(GacalcError):
    pass


class NotAnIsometry(GacalcError):
    pass


class GradeOutOfRange(GacalcError):
    pass


class ZeroScale(GacalcError):
    pass


class NotADerivation(GacalcError):
    pass


class DoesNotFixE0(GacalcError):
    pass


class ImageNotInIdeal(GacalcError):
    pass


class NotInSubalgebra(GacalcError):
    pass


class NotAUnit(GacalcError):
    def __init__(self, message: str, detail: Optional[str] = None):
        super().__init__(message if detail is None else f"{message}: {detail}")
        self.detail = detail


class NotGrade2(GacalcError):
    pass


class BasisNotSpanning(GacalcError):
    pass


class NotAPlane(GacalcError):
    pass


class ParseError(GacalcError):
    """Syntax error in a multivector expression, located by byte offset."""

    def __init__(self, message: str, offset: int, expected: FrozenSet[str] = frozenset()):
        detail = f"{message} at offset {offset}"
        if expected:
            detail += f" (expected one of: {', '.join(sorted(expected))})"
        super().__init__(detail)
        self.offset = offset
        self.expected = frozenset(expected)


class UnknownBlade(GacalcError):
    pass
