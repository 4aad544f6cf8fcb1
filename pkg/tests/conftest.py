# tests/conftest.py

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gacalc.clifford_core import CliffordAlgebra
from gacalc.pga3d import PointP, point_complement
from gacalc.quadratic_space import Complement, QuadraticForm
from gacalc.scalars import ScalarMode

settings.register_profile(
    "gacalc",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("gacalc")


# --- Strategies ---
def rationals(bound: int = 5, max_den: int = 3):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, max_den))


def multivectors(algebra: CliffordAlgebra):
    return st.dictionaries(
        st.integers(0, algebra.blade_count - 1),
        rationals().filter(bool),
        max_size=algebra.blade_count,
    ).map(algebra.multivector)


def homogeneous(algebra: CliffordAlgebra, k: int):
    masks = algebra.blades_of_grade(k)
    return st.lists(rationals(), min_size=len(masks), max_size=len(masks)).map(
        lambda cs: algebra.multivector(dict(zip(masks, cs))))


def points():
    return st.builds(PointP, rationals(), rationals(), rationals())


# --- Fixtures ---
@pytest.fixture
def pga3():
    """Cl(3,0,1) over the rationals."""
    return CliffordAlgebra.of(QuadraticForm.pga3(ScalarMode.RATIONAL))


@pytest.fixture
def pga3_float():
    return CliffordAlgebra.of(QuadraticForm.pga3(ScalarMode.FLOAT))


@pytest.fixture
def origin(pga3):
    """V_O, the planes through the origin (the coordinate complement)."""
    return Complement.coordinate(pga3.form)


@pytest.fixture
def v_p():
    """V_P for P = (1, 2, 3)."""
    return point_complement(PointP(Fraction(1), Fraction(2), Fraction(3)))


@pytest.fixture
def hyperbolic_form():
    """Non-diagonal gram: e0 degenerate, hyperbolic plane on (e1, e2), e3 Euclidean."""
    rows = [[0, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    return QuadraticForm.from_gram(rows, ScalarMode.RATIONAL)
