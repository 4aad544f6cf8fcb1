# tests/test_parser.py

import pytest
from hypothesis import given

from gacalc.clifford_core import CliffordAlgebra
from gacalc.errors import GradeOutOfRange, NotAUnit, ParseError, ScalarModeError, UnknownBlade
from gacalc.parser import BinOp, Blade, Call, Neg, Number, evaluate_source, parse, tokenize
from gacalc.quadratic_space import QuadraticForm
from gacalc.scalars import ScalarMode

from .conftest import multivectors

R = ScalarMode.RATIONAL
PGA3 = CliffordAlgebra.of(QuadraticForm.pga3(R))


def ev(src, algebra=PGA3):
    return evaluate_source(src, algebra)


# --- Syntax ---
def test_blade_literal():
    assert parse("e0") == Blade((0,), 0)
    assert parse("e023") == Blade((0, 2, 3), 0)
    assert parse("e1_11") == Blade((1, 11), 0)


def test_sum_of_products():
    tree = parse("2 + 3*e1 - e01")
    assert tree == BinOp("-", BinOp("+", Number("2", 0), BinOp("*", Number("3", 4), Blade((1,), 6))),
                         Blade((0, 1), 11))


def test_grade_call():
    tree = parse("grade(e1*e2, 2)")
    assert isinstance(tree, Call) and tree.name == "grade"
    assert tree.args[0] == BinOp("*", Blade((1,), 6), Blade((2,), 9))


def test_products_share_one_left_associative_level():
    tree = parse("e1*e2^e3")
    assert tree == BinOp("^", BinOp("*", Blade((1,), 0), Blade((2,), 3)), Blade((3,), 6))
    assert ev("e1 + e2*e3") == ev("e1 + (e2*e3)")
    assert ev("e1*e2^e3") == ev("(e1*e2)^e3")
    assert ev("e12 x e1") == ev("cmt(e12, e1)")


def test_unary_minus_binds_tightest():
    assert parse("-e1*e2") == BinOp("*", Neg(Blade((1,), 1)), Blade((2,), 4))
    assert ev("-e1*e2") == -ev("e12")


def test_whitespace_is_insignificant():
    assert ev("  e1 *   e2+1 ") == ev("e1*e2+1")


# --- Errors ---
def test_syntax_error_reports_offset_and_expected_tokens():
    with pytest.raises(ParseError) as excinfo:
        parse("e1 + * e2")
    assert excinfo.value.offset == 5
    assert "number" in excinfo.value.expected


def test_unclosed_parenthesis():
    with pytest.raises(ParseError) as excinfo:
        parse("(e1 + e2")
    assert excinfo.value.offset == 8
    assert excinfo.value.expected == frozenset({")"})


def test_offsets_count_bytes():
    with pytest.raises(ParseError) as excinfo:
        # the no-break space is two bytes in UTF-8
        list(tokenize("e1 $"))
    assert excinfo.value.offset == 4


def test_descending_blade_indices_are_rejected():
    with pytest.raises(ParseError):
        parse("e21")


def test_out_of_range_blade():
    with pytest.raises(UnknownBlade):
        ev("e4")


def test_unknown_function_suggests_a_name():
    with pytest.raises(ParseError, match="did you mean 'inv'"):
        parse("invv(e1)")


def test_exponent_notation_is_not_a_number():
    for src in ("2e1", "2e0", "1.5e3"):
        with pytest.raises(ParseError) as excinfo:
            parse(src)
        assert excinfo.value.offset == src.index("e")
    assert parse("2*e1") == BinOp("*", Number("2", 0), Blade((1,), 2))


def test_wrong_arity():
    with pytest.raises(ParseError, match="takes 2"):
        parse("grade(e1)")


# --- Evaluation ---
def test_eval_examples():
    assert ev("e1*e1") == 1
    assert not ev("e0*e0")
    assert ev("cmt(e12, e1)") == -ev("e2")
    assert ev("inv(1 + e0)") == ev("1 - e0")
    assert ev("gi(1 + e1)") == ev("1 - e1")
    assert ev("grade(2 + e12, 2)") == ev("e12")
    assert ev("1/2 + 1/2") == 1


def test_eval_errors():
    with pytest.raises(NotAUnit):
        ev("inv(e0)")
    with pytest.raises(GradeOutOfRange):
        ev("grade(e1, e1)")


def test_decimals_need_float_mode():
    floats = CliffordAlgebra.of(QuadraticForm.pga3(ScalarMode.FLOAT))
    assert ev("0.5*e1", floats).coefficient(0b10) == 0.5
    with pytest.raises(ScalarModeError):
        ev("0.5*e1")


@given(multivectors(PGA3))
def test_print_parse_round_trip(x):
    assert ev(x.to_text()) == x


HYPERBOLIC = CliffordAlgebra.of(QuadraticForm.from_gram(
    [[0, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], R))


def test_blade_literals_use_the_gram_basis():
    assert ev("e1*e1", HYPERBOLIC) == 0
    assert ev("e1*e2 + e2*e1", HYPERBOLIC) == 2
    assert ev("e3*e3", HYPERBOLIC) == 1
    assert ev("e12", HYPERBOLIC) == ev("e1^e2", HYPERBOLIC)


@given(multivectors(HYPERBOLIC))
def test_print_parse_round_trip_in_a_non_diagonal_algebra(x):
    assert ev(x.to_text(), HYPERBOLIC) == x
