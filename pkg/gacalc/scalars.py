# gacalc/scalars.py
"""
The scalar tower: exact rationals (``fractions.Fraction``) and 64-bit floats.

Every value handled by the library is one of the two; the mode travels with
the quadratic form so that a whole algebra is either exact or floating.
"""

import math
import re
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from . import config
from .errors import ScalarModeError

Scalar = Union[Fraction, float]


class ScalarMode(str, Enum):
    RATIONAL = "rational"
    FLOAT = "float"


_RATIONAL_LITERAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_DECIMAL_LITERAL = re.compile(r"^[+-]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?$")


def coerce(value, mode: ScalarMode) -> Scalar:
    """Converts an int, Fraction, float or literal string into a scalar of `mode`."""
    if isinstance(value, str):
        return parse_scalar(value, mode)
    if mode is ScalarMode.RATIONAL:
        if isinstance(value, float):
            if not value.is_integer():
                raise ScalarModeError(f"float {value!r} is not accepted in rational mode")
            return Fraction(int(value))
        return Fraction(value)
    return float(value)


def parse_scalar(text: str, mode: ScalarMode) -> Scalar:
    """Parses `p`, `p/q` or (float mode only) a decimal literal."""
    text = text.strip()
    if _RATIONAL_LITERAL.match(text):
        if "/" in text and int(text.split("/")[1]) == 0:
            raise ScalarModeError(f"zero denominator in {text!r}")
        value = Fraction(text)
        return value if mode is ScalarMode.RATIONAL else float(value)
    if _DECIMAL_LITERAL.match(text):
        if mode is ScalarMode.RATIONAL:
            raise ScalarModeError(f"decimal literal {text!r} requires float mode")
        return float(text)
    raise ScalarModeError(f"not a scalar literal: {text!r}")


def zero(mode: ScalarMode) -> Scalar:
    return Fraction(0) if mode is ScalarMode.RATIONAL else 0.0


def one(mode: ScalarMode) -> Scalar:
    return Fraction(1) if mode is ScalarMode.RATIONAL else 1.0


def is_zero(value: Scalar) -> bool:
    if isinstance(value, float):
        return abs(value) <= config.FLOAT_TOLERANCE
    return value == 0


def is_close(a: Scalar, b: Scalar) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(float(a), float(b), rel_tol=1e-9, abs_tol=config.FLOAT_TOLERANCE)
    return a == b


def format_scalar(value: Scalar) -> str:
    if isinstance(value, float):
        if value.is_integer() and abs(value) < 1e15:
            return str(int(value))
        return repr(value)
    return str(value)


def exact_sqrt(value: Fraction) -> Optional[Fraction]:
    """Square root of a nonnegative rational if it is itself rational, else None."""
    if value < 0:
        return None
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None
