# tests/test_clifford_core.py

from fractions import Fraction

import pytest
from hypothesis import given

from gacalc.clifford_core import (
    ALGEBRA_CACHE_SIZE,
    CliffordAlgebra,
    LinearEndo,
    Multivector,
    blade_name,
    clifford_extend,
    geometric_product,
    grade_involution,
    grade_part,
    left_mul_matrix,
    reorder_sign,
    right_mul_matrix,
    _algebra_for,
    wedge,
)
from gacalc.errors import AlgebraMismatch, GradeOutOfRange, NotAnIsometry, UnknownBlade
from gacalc.quadratic_space import QuadraticForm, Vector, bilinear
from gacalc.scalars import ScalarMode
from gacalc.verification import rewrite_word

from .conftest import multivectors

R = ScalarMode.RATIONAL
PGA3 = CliffordAlgebra.of(QuadraticForm.pga3(R))


def blade(*indices, alg=PGA3):
    return alg.blade(indices)


def diag(*entries):
    n = len(entries)
    return [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]


ROTATION_12 = [[1, 0, 0, 0], [0, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]


# --- Blades ---
def test_reorder_sign():
    assert reorder_sign(0b01, 0b10) == 1
    assert reorder_sign(0b10, 0b01) == -1
    assert reorder_sign(0b110, 0b001) == 1


def test_blade_names():
    assert blade_name(0) == "1"
    assert blade_name(0b1011) == "e013"
    assert blade_name((1 << 1) | (1 << 11)) == "e1_11"


def test_blade_constructor_sorts_with_sign():
    assert blade(2, 1) == -blade(1, 2)
    with pytest.raises(UnknownBlade):
        blade(4)
    with pytest.raises(UnknownBlade):
        blade(1, 1)


def test_algebra_is_cached_per_form():
    assert CliffordAlgebra.of(QuadraticForm.pga3(R)) is PGA3


# --- Products ---
def test_geometric_product_examples():
    """e1 e1 = 1, e0 e0 = 0, e2 e1 = -e12."""
    assert blade(1) * blade(1) == 1
    assert not blade(0) * blade(0)
    assert blade(2) * blade(1) == -blade(1, 2)


def test_product_table_matches_rewrite_oracle():
    for a in range(PGA3.blade_count):
        for b in range(PGA3.blade_count):
            word = [i for i in range(4) if a >> i & 1] + [i for i in range(4) if b >> i & 1]
            coeff, mask = rewrite_word(word, PGA3.metric)
            got = PGA3.blade_product(a, b)
            assert got[0] == coeff
            if coeff:
                assert got[1] == mask


def test_anticommutation_in_mixed_signature():
    alg = CliffordAlgebra.of(QuadraticForm.from_signature(2, 1, 1, R))
    assert alg.metric == (0, 1, 1, -1)
    for i in range(4):
        for j in range(4):
            ei, ej = alg.generator(i), alg.generator(j)
            expected = 2 * alg.metric[i] if i == j else 0
            assert ei * ej + ej * ei == expected


@pytest.mark.parametrize("rows", [
    [[0, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
    [[0, 0, 0, 0], [0, 2, 1, 0], [0, 1, -1, 3], [0, 0, 3, 1]],
])
def test_blades_of_a_non_diagonal_gram_satisfy_its_clifford_relation(rows):
    form = QuadraticForm.from_gram(rows, R)
    alg = CliffordAlgebra.of(form)
    for i in range(4):
        for j in range(4):
            ei, ej = alg.working_blade([i]), alg.working_blade([j])
            expected = 2 * bilinear(form, Vector.basis(4, i, R), Vector.basis(4, j, R))
            assert ei * ej + ej * ei == expected


def test_working_blades_are_wedges_of_working_vectors():
    alg = CliffordAlgebra.of(QuadraticForm.from_gram([[0, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], R))
    e1, e2 = alg.working_blade([1]), alg.working_blade([2])
    assert alg.working_blade([1, 2]) == wedge(e1, e2)
    assert (e1 * e2).to_text() == "1 + e12"
    assert (e1 * e2).to_json()["terms"] == {"1": "1", "e12": "1"}
    assert alg.working_blade([2]).to_text() == "e2"


@given(multivectors(PGA3), multivectors(PGA3), multivectors(PGA3))
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(multivectors(PGA3))
def test_e0_commutes_through_grade_involution(x):
    e0 = PGA3.e0()
    assert e0 * x == grade_involution(x) * e0


def test_products_across_algebras_fail():
    other = CliffordAlgebra.of(QuadraticForm.from_signature(3, 0, 0, R))
    with pytest.raises(AlgebraMismatch):
        geometric_product(PGA3.generator(1), other.generator(1))


# --- Wedge and grades ---
def test_wedge_examples():
    assert not wedge(blade(1), blade(1))
    assert wedge(blade(0), blade(1)) == blade(0, 1)
    assert wedge(PGA3.one() + blade(1), blade(2)) == blade(2) + blade(1, 2)
    assert blade(1) ^ blade(2) == blade(1, 2)


def test_grade_part_examples():
    x = PGA3.one() + blade(1) + blade(1, 2)
    assert grade_part(x, 1) == blade(1)
    assert grade_part(blade(0, 1, 2, 3), 4) == blade(0, 1, 2, 3)
    assert grade_part((blade(1) + blade(0)) * blade(1), 0) == 1
    with pytest.raises(GradeOutOfRange):
        grade_part(x, 5)


@given(multivectors(PGA3))
def test_grade_parts_rebuild(x):
    total = PGA3.zero()
    for k in range(5):
        total = total + grade_part(x, k)
    assert total == x


def test_grade_involution_examples():
    assert grade_involution(PGA3.one()) == 1
    assert grade_involution(blade(1)) == -blade(1)
    assert grade_involution(blade(1, 2) + blade(0)) == blade(1, 2) - blade(0)


@given(multivectors(PGA3), multivectors(PGA3))
def test_grade_involution_is_an_involutive_automorphism(x, y):
    assert grade_involution(x * y) == grade_involution(x) * grade_involution(y)
    assert grade_involution(grade_involution(x)) == x


# --- Text form ---
def test_text_form():
    x = PGA3.multivector({0: Fraction(2), 0b10: Fraction(3), 0b11: Fraction(-1), 0b1110: Fraction(1)})
    assert x.to_text() == "2 + 3*e1 - e01 + e123"
    assert PGA3.zero().to_text() == "0"
    assert (-blade(1)).to_text() == "-e1"
    assert blade(2).scale(Fraction(-1, 2)).to_text() == "-1/2*e2"


def test_json_form():
    x = PGA3.one() + blade(1).scale(3)
    assert x.to_json() == {"terms": {"1": "1", "e1": "3"}, "algebra": "pga3"}


def test_no_zero_coefficient_is_stored():
    x = PGA3.multivector({1: Fraction(0), 2: Fraction(1)})
    assert list(x.terms) == [2]
    with pytest.raises(UnknownBlade):
        Multivector(PGA3, {16: Fraction(1)})


# --- Linear maps ---
def test_clifford_extend_of_minus_id_is_grade_involution():
    assert clifford_extend(diag(-1, -1, -1, -1), PGA3) == LinearEndo.from_function(PGA3, grade_involution)


def test_clifford_extend_of_id_is_identity():
    assert clifford_extend(diag(1, 1, 1, 1), PGA3) == LinearEndo.identity(PGA3)


def test_clifford_extend_rotation_fixes_e12():
    rot = clifford_extend(ROTATION_12, PGA3)
    assert rot(blade(1, 2)) == blade(1, 2)
    assert rot(blade(1)) == blade(2)


def test_clifford_extend_is_functorial():
    rot = clifford_extend(ROTATION_12, PGA3)
    twice = [[sum(ROTATION_12[i][k] * ROTATION_12[k][j] for k in range(4)) for j in range(4)] for i in range(4)]
    assert clifford_extend(twice, PGA3) == rot @ rot


def test_clifford_extend_rejects_non_isometries():
    with pytest.raises(NotAnIsometry):
        clifford_extend(diag(1, 2, 1, 1), PGA3)


def test_left_mul_matrix_examples():
    assert left_mul_matrix(PGA3.one()) == LinearEndo.identity(PGA3)
    m0 = left_mul_matrix(PGA3.e0())
    assert not m0.is_zero() and (m0 @ m0).is_zero()
    m1 = left_mul_matrix(blade(1))
    assert m1 @ m1 == LinearEndo.identity(PGA3)


@given(multivectors(PGA3), multivectors(PGA3))
def test_regular_representations(x, y):
    assert left_mul_matrix(x)(y) == x * y
    assert right_mul_matrix(x)(y) == y * x


def test_linear_endo_matrix_layout():
    m = left_mul_matrix(blade(1)).to_matrix()
    assert m[0b10][0] == 1
    assert m[0][0b10] == 1
    assert len(m) == 16 and len(m[0]) == 16


# --- Product tables ---
def test_small_algebras_share_a_read_only_table():
    assert isinstance(PGA3._table, tuple)
    assert PGA3.blade_product(0b0110, 0b0010) == (-1, 0b0100)


def test_large_algebras_compute_products_without_a_table():
    alg = CliffordAlgebra.of(QuadraticForm.from_signature(7, 0, 0, R))
    assert alg._table is None
    e = [alg.generator(i) for i in range(7)]
    assert e[6] * e[0] == -alg.blade([0, 6])
    assert alg.blade([0, 1, 2]) * alg.blade([1, 2]) == -e[0]
    assert alg._table is None


def test_algebra_cache_is_bounded():
    assert _algebra_for.cache_info().maxsize == ALGEBRA_CACHE_SIZE
