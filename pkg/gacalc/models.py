# gacalc/models.py

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from typing import Dict, List, Optional

from . import config
from .clifford_core import Multivector
from .errors import ConfigError
from .pga3d import Plane
from .quadratic_space import QuadraticForm
from .scalars import ScalarMode, format_scalar, parse_scalar
from .structure import LieTable
from .utils import load_gram_file, parse_signature


def default_scalar_mode() -> ScalarMode:
    """GACALC_SCALARS as a ScalarMode; a bad value is a configuration error."""
    value = config.default_scalars()
    try:
        return ScalarMode(value)
    except ValueError:
        choices = ", ".join(m.value for m in ScalarMode)
        raise ConfigError(f"GACALC_SCALARS must be one of {choices} (got {value!r})") from None


# --- CLI configuration ---
class CliConfig(BaseModel):
    """Where the algebra comes from, which scalars it uses, how results print."""
    algebra: Optional[str] = None
    signature: Optional[str] = None
    gram: Optional[str] = None
    scalars: ScalarMode = Field(default_factory=default_scalar_mode)
    json_output: bool = False

    @model_validator(mode='after')
    def exactly_one_algebra_source(self):
        sources = [s for s in (self.algebra, self.signature, self.gram) if s]
        if len(sources) > 1:
            raise ValueError("give only one of --algebra, --signature, --gram")
        if not sources:
            self.algebra = config.default_algebra()
        selector = self.signature or self.algebra
        if selector and selector != "pga3":
            sig = parse_signature(selector)
            if sig is None and self.signature:
                raise ValueError(f"signature must look like p,q,r (got {self.signature!r})")
            if sig is not None and sum(sig) > config.MAX_DIM:
                raise ValueError(f"p+q+r must be at most {config.MAX_DIM} (got {sum(sig)})")
        return self

    def build_form(self) -> QuadraticForm:
        if self.gram:
            return QuadraticForm.from_gram(load_gram_file(self.gram, self.scalars), self.scalars)
        selector = self.signature or self.algebra
        if selector == "pga3":
            return QuadraticForm.pga3(self.scalars)
        sig = parse_signature(selector)
        if sig is not None:
            return QuadraticForm.from_signature(*sig, mode=self.scalars)
        try:
            rows = load_gram_file(selector, self.scalars)
        except ConfigError:
            raise ConfigError(f"unknown algebra {selector!r}: use pga3, p,q,r or a gram file path") from None
        return QuadraticForm.from_gram(rows, self.scalars)


# --- API request models ---
class AlgebraRequest(BaseModel):
    """
    The algebra an API call works in: `pga3`, a `p,q,r` signature, or a gram
    matrix sent inline as rows of scalar literals. Gram files are a CLI-only
    source; the API never reads the server's filesystem.
    """
    algebra: str = "pga3"
    gram: Optional[List[List[str]]] = None
    scalars: ScalarMode = ScalarMode.RATIONAL

    @field_validator("algebra")
    @classmethod
    def named_algebra(cls, value: str) -> str:
        if value != "pga3" and parse_signature(value) is None:
            raise ValueError("algebra must be pga3 or p,q,r")
        return value

    @model_validator(mode='after')
    def one_algebra_source(self):
        if self.gram is not None and "algebra" in self.model_fields_set:
            raise ValueError("give either algebra or gram, not both")
        return self

    def build_form(self) -> QuadraticForm:
        if self.gram is not None:
            rows = [[parse_scalar(x, self.scalars) for x in row] for row in self.gram]
            return QuadraticForm.from_gram(rows, self.scalars)
        if self.algebra == "pga3":
            return QuadraticForm.pga3(self.scalars)
        return QuadraticForm.from_signature(*parse_signature(self.algebra), mode=self.scalars)


class ExpressionRequest(AlgebraRequest):
    expr: str


class DecomposeRequest(ExpressionRequest):
    point: Optional[str] = None


class CommutatorRequest(AlgebraRequest):
    b: str
    x: str


class ParallelRequest(BaseModel):
    point: str
    plane: str
    scalars: ScalarMode = ScalarMode.RATIONAL


class AngleRequest(BaseModel):
    plane1: str
    plane2: str


class CheckRequest(BaseModel):
    suite: str = "all"
    seed: Optional[int] = None


# --- API response models ---
class MultivectorPayload(BaseModel):
    terms: Dict[str, str]
    algebra: str
    text: str

    @classmethod
    def of(cls, mv: Multivector) -> "MultivectorPayload":
        return cls(**mv.to_json(), text=mv.to_text())


class DecompositionPayload(BaseModel):
    at_point: MultivectorPayload
    at_infinity: MultivectorPayload
    cofactor: MultivectorPayload


class UnitPayload(BaseModel):
    r: MultivectorPayload
    tail: MultivectorPayload


class PlanePayload(BaseModel):
    coords: List[str]
    text: str

    @classmethod
    def of(cls, plane: Plane) -> "PlanePayload":
        return cls(coords=[format_scalar(c) for c in plane.v], text=plane.to_multivector().to_text())


class AnglePayload(BaseModel):
    radians: float
    degrees: float


class LieTablePayload(BaseModel):
    basis: List[str]
    brackets: Dict[str, str]
    matches_se3: Optional[bool] = None

    @classmethod
    def of(cls, table: LieTable) -> "LieTablePayload":
        n = len(table.labels)
        brackets = {f"[{table.labels[i]}, {table.labels[j]}]": table.bracket(i, j).to_text()
                    for i in range(n) for j in range(i + 1, n)}
        return cls(basis=list(table.labels), brackets=brackets, matches_se3=table.matches_se3)


class LemmaReport(BaseModel):
    suite: str
    statement: str
    passed: bool
    checked: int = 0
    detail: Optional[str] = None
    seconds: float = 0.0

    model_config = ConfigDict(frozen=True)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.suite}: {self.statement} ({self.checked} checks, {self.seconds:.2f}s)"
        if self.detail:
            text += f" -- {self.detail}"
        return text
