# tests/test_pga3d.py

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gacalc.errors import NotAPlane
from gacalc.pga3d import (
    Plane,
    PointP,
    are_parallel,
    dihedral_angle,
    incidence_shift,
    incident,
    magnitude,
    normalized,
    parallel_through,
    point_complement,
)
from gacalc.quadratic_space import bilinear, quotient_project_vector
from gacalc.scalars import ScalarMode

from .conftest import points, rationals

ORIGIN = PointP.of([0, 0, 0])
X1 = PointP.of([1, 0, 0])


def plane(*coords):
    return Plane.of(coords)


def planes():
    return st.lists(rationals(), min_size=4, max_size=4).filter(lambda v: any(v[1:])).map(Plane.of)


# --- Planes ---
def test_ideal_vectors_are_not_planes():
    with pytest.raises(NotAPlane):
        plane(1, 0, 0, 0)
    with pytest.raises(NotAPlane):
        plane(0, 1, 0)


def test_magnitude_examples():
    assert magnitude(plane(0, 1, 0, 0)) == 1
    assert magnitude(plane(7, 0, 3, 4)) == 5
    assert isinstance(magnitude(plane(0, 1, 1, 0)), float)
    assert magnitude(normalized(plane(7, 0, 3, 4))) == 1


@given(planes(), rationals())
def test_magnitude_is_constant_on_a_parallel_class(p, mu):
    shifted = Plane.of([p.v[0] + mu, *p.v.coords[1:]])
    assert magnitude(shifted) == magnitude(p)


# --- Angles ---
def test_dihedral_angle_examples():
    e1 = plane(0, 1, 0, 0)
    assert dihedral_angle(e1, plane(0, 0, 1, 0)) == pytest.approx(math.pi / 2)
    assert dihedral_angle(e1, plane(5, 1, 0, 0)) == pytest.approx(0.0)
    s = 1 / math.sqrt(2)
    diagonal = Plane.of([0.0, s, s, 0.0], ScalarMode.FLOAT)
    assert dihedral_angle(e1, diagonal) == pytest.approx(math.pi / 4)
    assert dihedral_angle(e1, plane(0, -1, 0, 0)) == pytest.approx(math.pi)


@given(planes(), planes())
def test_cosine_law_against_normals(u, v):
    a = np.array([float(c) for c in u.normal])
    b = np.array([float(c) for c in v.normal])
    expected = a @ b / (np.linalg.norm(a) * np.linalg.norm(b))
    assert math.cos(dihedral_angle(u, v)) == pytest.approx(expected, abs=1e-12)


# --- Incidence ---
def test_incidence_examples():
    assert incident(ORIGIN, plane(0, 1, 0, 0))
    assert not incident(X1, plane(0, 1, 0, 0))
    assert incident(X1, plane(-1, 1, 0, 0))


def test_point_complements():
    origin = point_complement(ORIGIN)
    for v in ([0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]):
        assert origin.contains(v)
    shifted = point_complement(X1)
    assert shifted.contains([-1, 1, 0, 0])
    assert not shifted.contains([0, 1, 0, 0])


@given(points())
def test_point_complement_is_orthogonal_to_e0(p):
    comp = point_complement(p)
    e0 = comp.form.e0()
    assert all(bilinear(comp.form, w, e0) == 0 for w in comp.subspace.basis)


# --- Playfair's axiom ---
def test_parallel_through_examples():
    assert parallel_through(X1, plane(0, 1, 0, 0)).v.coords == (-1, 1, 0, 0)
    through_origin = plane(0, 1, 2, 3)
    assert parallel_through(ORIGIN, through_origin) == through_origin
    assert parallel_through(PointP.of([0, 0, 2]), plane(1, 0, 0, 1)).v.coords == (-2, 0, 0, 1)


@given(points(), planes())
def test_parallel_plane_is_unique(p, pl):
    result = parallel_through(p, pl)
    comp = point_complement(p)
    assert incident(p, result)
    assert are_parallel(result, pl)
    assert quotient_project_vector(result.v, comp) == quotient_project_vector(pl.v, comp)
    # the only e0-shift of pl through p
    assert result.v[0] - pl.v[0] == incidence_shift(p, pl)


@given(points(), planes(), rationals().filter(bool))
def test_parallel_through_is_homogeneous(p, pl, lam):
    assert parallel_through(p, pl.scale(lam)) == parallel_through(p, pl).scale(lam)


def test_parallel_through_in_float_mode():
    p = PointP.of([0.5, 0.0, 0.0], ScalarMode.FLOAT)
    result = parallel_through(p, Plane.of([0.0, 2.0, 0.0, 0.0], ScalarMode.FLOAT))
    assert result.v.isclose(Plane.of([-1.0, 2.0, 0.0, 0.0], ScalarMode.FLOAT).v)
    assert magnitude(result) == pytest.approx(2.0)


def test_incidence_shift_is_exact():
    assert incidence_shift(PointP.of([Fraction(1, 3), 0, 0]), plane(0, 3, 0, 0)) == -1
