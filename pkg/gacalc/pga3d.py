# gacalc/pga3d.py
"""
Plane-based projective geometric algebra of Euclidean 3-space, Cl(3,0,1).

A vector v0 e0 + v1 e1 + v2 e2 + v3 e3 is the plane v0 + v1 x + v2 y + v3 z = 0.
Vectors differing by a multiple of e0 are parallel planes; the planes
through a point P form a complement V_P of R e0.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from . import linalg
from .clifford_core import CliffordAlgebra, Multivector
from .errors import NotAPlane
from .quadratic_space import (
    Complement,
    QuadraticForm,
    Subspace,
    Vector,
    bilinear,
    playfair_project_vector,
)
from .scalars import Scalar, ScalarMode, coerce, exact_sqrt, is_zero


def _mode_of(values: Sequence[Scalar]) -> ScalarMode:
    return ScalarMode.FLOAT if any(isinstance(v, float) for v in values) else ScalarMode.RATIONAL


@dataclass(frozen=True)
class Plane:
    v: Vector

    def __post_init__(self):
        if len(self.v) != 4:
            raise NotAPlane(f"a plane needs 4 coordinates, got {len(self.v)}")
        if all(is_zero(c) for c in self.v.coords[1:]):
            raise NotAPlane("multiples of e0 do not represent planes")

    @classmethod
    def of(cls, values: Sequence, mode: ScalarMode = ScalarMode.RATIONAL) -> "Plane":
        return cls(Vector.of(values, mode))

    @property
    def mode(self) -> ScalarMode:
        return _mode_of(self.v.coords)

    @property
    def normal(self) -> Tuple[Scalar, Scalar, Scalar]:
        return self.v.coords[1], self.v.coords[2], self.v.coords[3]

    def to_multivector(self, algebra: CliffordAlgebra = None) -> Multivector:
        algebra = algebra or CliffordAlgebra.of(QuadraticForm.pga3(self.mode))
        return algebra.vector(self.v.coords)

    def scale(self, s: Scalar) -> "Plane":
        return Plane(self.v.scale(s))


@dataclass(frozen=True)
class PointP:
    x: Scalar
    y: Scalar
    z: Scalar

    @classmethod
    def of(cls, values: Sequence, mode: ScalarMode = ScalarMode.RATIONAL) -> "PointP":
        x, y, z = (coerce(c, mode) for c in values)
        return cls(x, y, z)

    @property
    def mode(self) -> ScalarMode:
        return _mode_of((self.x, self.y, self.z))


def pga3_form(mode: ScalarMode) -> QuadraticForm:
    return QuadraticForm.pga3(mode)


# --- Metric quantities ---
def magnitude_squared(plane: Plane) -> Scalar:
    return bilinear(pga3_form(plane.mode), plane.v, plane.v)


def magnitude(plane: Plane) -> Union[Fraction, float]:
    """|v|; exact when B(v, v) is a rational square."""
    sq = magnitude_squared(plane)
    if isinstance(sq, Fraction):
        root = exact_sqrt(sq)
        if root is not None:
            return root
    return math.sqrt(sq)


def normalized(plane: Plane) -> Plane:
    return plane.scale(1 / magnitude(plane))


def dihedral_angle(u: Plane, v: Plane) -> float:
    """Angle in [0, pi] with B(u, v) = |u||v| cos(theta)."""
    cos = float(bilinear(pga3_form(ScalarMode.FLOAT), [float(c) for c in u.v], [float(c) for c in v.v]))
    cos /= float(magnitude(u)) * float(magnitude(v))
    return math.acos(max(-1.0, min(1.0, cos)))


# --- Incidence and parallelism ---
def incidence_value(p: PointP, plane: Plane) -> Scalar:
    v0, v1, v2, v3 = plane.v.coords
    return v0 + v1 * p.x + v2 * p.y + v3 * p.z


def incident(p: PointP, plane: Plane) -> bool:
    return is_zero(incidence_value(p, plane))


def incidence_shift(p: PointP, plane: Plane) -> Scalar:
    """The unique lam for which plane + lam*e0 passes through p."""
    return -incidence_value(p, plane)


def are_parallel(u: Plane, v: Plane) -> bool:
    """u = lam*v + mu*e0 for some lam != 0."""
    mode = _mode_of(u.v.coords + v.v.coords)
    return linalg.rank([list(u.normal), list(v.normal)], 3, mode) == 1


def point_complement(p: PointP) -> Complement:
    """V_P, the planes through p, spanned by e_i - p_i e0."""
    mode = p.mode
    form = pga3_form(mode)
    basis = []
    for i, c in enumerate((p.x, p.y, p.z), start=1):
        coords = [-coerce(c, mode), 0, 0, 0]
        coords[i] = 1
        basis.append(form.vector(coords))
    return Complement(form, Subspace(tuple(basis)), point=(p.x, p.y, p.z))


def parallel_through(p: PointP, plane: Plane) -> Plane:
    """omega_P(pi(plane)): the plane through p parallel to `plane`, same orientation and magnitude."""
    mode = ScalarMode.FLOAT if ScalarMode.FLOAT in (p.mode, plane.mode) else ScalarMode.RATIONAL
    point = PointP.of((p.x, p.y, p.z), mode)
    v = Vector.of(plane.v.coords, mode)
    w, _ = playfair_project_vector(v, point_complement(point))
    result = Plane(w)
    shift = incidence_shift(point, Plane(v))
    expected = v + Vector.basis(4, 0, mode).scale(shift)
    if not result.v.isclose(expected):
        raise NotAPlane(f"parallel plane {result.v.coords} disagrees with the incidence shift")
    return result
