# tests/test_utils_models.py

from fractions import Fraction
from pathlib import Path

import pytest

from gacalc.clifford_core import CliffordAlgebra
from gacalc.errors import ConfigError, DimensionMismatch
from gacalc.models import AlgebraRequest, CliConfig, LemmaReport, LieTablePayload, MultivectorPayload
from gacalc.quadratic_space import Complement, QuadraticForm
from gacalc.scalars import ScalarMode
from gacalc.structure import bivector_lie_table
from gacalc.utils import complement_for, load_gram_file, parse_plane, parse_point, parse_scalar_list, parse_signature

DATA = Path(__file__).resolve().parent.parent / "data"
R = ScalarMode.RATIONAL


# --- utils ---
def test_load_gram_file_skips_comments():
    rows = load_gram_file(str(DATA / "pga3_gram.txt"), R)
    assert rows == [[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert QuadraticForm.from_gram(rows, R) == QuadraticForm.pga3(R)


def test_load_gram_file_errors(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        load_gram_file(str(tmp_path / "missing.txt"), R)
    ragged = tmp_path / "ragged.txt"
    ragged.write_text("1 0\n0\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="square"):
        load_gram_file(str(ragged), R)
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="empty"):
        load_gram_file(str(empty), R)


def test_load_gram_file_does_not_echo_entries(tmp_path):
    secret = tmp_path / "settings.env"
    secret.write_text("API_KEY=hunter2\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="not a rational scalar") as excinfo:
        load_gram_file(str(secret), R)
    assert "hunter2" not in str(excinfo.value)


def test_parse_lists():
    assert parse_scalar_list("1, 1/2,-3", R) == [1, Fraction(1, 2), -3]
    with pytest.raises(DimensionMismatch):
        parse_scalar_list("1,2", R, expected=3)
    assert parse_point("1,2,3", R).z == 3
    assert parse_plane("0,1,0,0", R).normal == (1, 0, 0)


def test_parse_signature():
    assert parse_signature("3,0,1") == (3, 0, 1)
    assert parse_signature("pga3") is None
    assert parse_signature("3,0") is None


def test_complement_for():
    form = QuadraticForm.pga3(R)
    assert complement_for(form).contains([0, 1, 0, 0])
    assert complement_for(form, "1,0,0").contains([-1, 1, 0, 0])
    with pytest.raises(ConfigError):
        complement_for(QuadraticForm.from_signature(2, 0, 1, R), "0,0,0")


# --- models ---
def test_cli_config_defaults(monkeypatch):
    monkeypatch.delenv("GACALC_ALGEBRA", raising=False)
    monkeypatch.delenv("GACALC_SCALARS", raising=False)
    cfg = CliConfig()
    assert cfg.algebra == "pga3"
    assert cfg.scalars is ScalarMode.FLOAT
    assert cfg.build_form() == QuadraticForm.pga3(ScalarMode.FLOAT)


def test_cli_config_sources():
    assert CliConfig(signature="2,1,1", scalars="rational").build_form().name == "2,1,1"
    cfg = CliConfig(algebra=str(DATA / "hyperbolic_degenerate_gram.txt"), scalars="rational")
    assert cfg.build_form().diagonalization.signature == (2, 1, 1)
    with pytest.raises(ConfigError, match="unknown algebra"):
        CliConfig(algebra="spacetime").build_form()


def test_cli_config_validation():
    with pytest.raises(ValueError, match="only one of"):
        CliConfig(algebra="pga3", gram="x.txt")
    with pytest.raises(ValueError, match="p,q,r"):
        CliConfig(signature="3;0;1")
    with pytest.raises(ValueError, match="at most 12"):
        CliConfig(signature="10,2,1")


def test_multivector_payload():
    alg = CliffordAlgebra.of(QuadraticForm.pga3(R))
    payload = MultivectorPayload.of(alg.blade([0, 1]).scale(Fraction(-1, 2)) + 1)
    assert payload.terms == {"1": "1", "e01": "-1/2"}
    assert payload.text == "1 - 1/2*e01"


def test_lie_table_payload():
    table = bivector_lie_table(CliffordAlgebra.of(QuadraticForm.from_signature(3, 0, 0, R)))
    payload = LieTablePayload.of(table)
    assert len(payload.brackets) == 3
    assert payload.matches_se3 is None


def test_lemma_report_line():
    report = LemmaReport(suite="units", statement="x is a unit", passed=False, checked=3,
                         detail="LemmaViolation: boom", seconds=0.5)
    assert report.line() == "FAIL units: x is a unit (3 checks, 0.50s) -- LemmaViolation: boom"


def test_coordinate_complement_of_the_hyperbolic_form(hyperbolic_form):
    comp = Complement.coordinate(hyperbolic_form)
    assert comp.dim == 4
    assert comp.contains([0, 0, 0, 1])


def test_cli_config_rejects_a_bad_scalar_mode_from_the_environment(monkeypatch):
    monkeypatch.setenv("GACALC_SCALARS", "bogus")
    with pytest.raises(ValueError, match="GACALC_SCALARS"):
        CliConfig()
    assert CliConfig(scalars="rational").scalars is ScalarMode.RATIONAL


def test_algebra_request_sources():
    assert AlgebraRequest().build_form() == QuadraticForm.pga3(R)
    assert AlgebraRequest(algebra="2,0,1").build_form().name == "2,0,1"
    inline = AlgebraRequest(gram=[["0", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]])
    assert inline.build_form().diagonalization.signature == (1, 1, 1)


def test_algebra_request_never_names_a_file():
    with pytest.raises(ValueError, match="pga3 or p,q,r"):
        AlgebraRequest(algebra=str(DATA / "pga3_gram.txt"))
    with pytest.raises(ValueError, match="either algebra or gram"):
        AlgebraRequest(algebra="pga3", gram=[["1"]])
