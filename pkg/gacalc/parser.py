# gacalc/parser.py
"""
The multivector expression language.

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '^' | 'x') unary)*      left-associative
    unary   := '-' unary | primary
    primary := NUMBER | BLADE | IDENT '(' args ')' | '(' expr ')'

`*` is the geometric product, `^` the wedge and `x` the commutator; the
three share one precedence level, so write parentheses when mixing them.
Numbers are `p` or `p/q` (decimals only in float mode, no exponent
notation, so `2e1` is a syntax error rather than 20). Blades are `e`
followed by strictly ascending indices: one digit each (`e023`) or
underscore-separated groups (`e1_11`). They name wedges of the gram
matrix's own basis vectors.
"""

import logging
import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple, Union

from fuzzywuzzy import process

from . import structure
from .clifford_core import CliffordAlgebra, Multivector, grade_involution, grade_part, wedge
from .errors import GradeOutOfRange, ParseError, UnknownBlade
from .scalars import parse_scalar

log = logging.getLogger(__name__)

# name -> arity
FUNCTIONS = {"inv": 1, "gi": 1, "grade": 2, "cmt": 2}

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>\d+\.\d*|\.\d+|\d+(?:/\d+)?)
  | (?P<blade>e\d+(?:_\d+)*(?![A-Za-z0-9_]))
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^(),])
""", re.VERBOSE)

_PRIMARY_START = frozenset({"number", "blade", "function", "(", "-"})
_AFTER_OPERAND = frozenset({"+", "-", "*", "^", "x", "end of input"})

# binding powers
_SUM_BP = 10
_PRODUCT_BP = 20
_UNARY_BP = 30


# --- AST ---
@dataclass(frozen=True)
class Number:
    text: str
    offset: int


@dataclass(frozen=True)
class Blade:
    indices: Tuple[int, ...]
    offset: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple["Expr", ...]
    offset: int


Expr = Union[Number, Blade, Neg, BinOp, Call]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


# --- Lexer ---
def _byte_offset(src: str, pos: int) -> int:
    return len(src[:pos].encode("utf-8"))


def tokenize(src: str) -> Iterator[Token]:
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", _byte_offset(src, pos), _PRIMARY_START)
        kind = m.lastgroup
        if kind != "ws":
            text = m.group()
            yield Token(text if kind == "op" else kind, text, _byte_offset(src, pos))
        pos = m.end()
    yield Token("end", "", _byte_offset(src, len(src)))


def blade_indices_from_text(text: str, offset: int) -> Tuple[int, ...]:
    body = text[1:]
    if "_" in body:
        indices = tuple(int(part) for part in body.split("_"))
    else:
        indices = tuple(int(ch) for ch in body)
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise ParseError(f"blade {text} must list strictly ascending indices", offset)
    return indices


# --- Parser ---
class Parser:
    """Pratt parser over the token stream of one expression."""

    def __init__(self, src: str, dim: Optional[int] = None):
        self.src = src
        self.dim = dim
        self.tokens: List[Token] = list(tokenize(src))
        self.pos = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str) -> Token:
        if self.token.kind != kind:
            raise ParseError(f"unexpected {self._describe(self.token)}", self.token.offset, frozenset({kind}))
        return self.advance()

    @staticmethod
    def _describe(t: Token) -> str:
        return "end of input" if t.kind == "end" else repr(t.text)

    def _lbp(self, t: Token) -> int:
        if t.kind in ("+", "-"):
            return _SUM_BP
        if t.kind in ("*", "^") or (t.kind == "ident" and t.text == "x"):
            return _PRODUCT_BP
        return 0

    def parse(self) -> Expr:
        expr = self.expression(0)
        if self.token.kind != "end":
            raise ParseError(f"unexpected {self._describe(self.token)}", self.token.offset, _AFTER_OPERAND)
        return expr

    def expression(self, rbp: int) -> Expr:
        left = self.nud(self.advance())
        while rbp < self._lbp(self.token):
            t = self.advance()
            op = "x" if t.kind == "ident" else t.kind
            left = BinOp(op, left, self.expression(self._lbp(t)))
        return left

    def nud(self, t: Token) -> Expr:
        if t.kind == "number":
            return Number(t.text, t.offset)
        if t.kind == "blade":
            indices = blade_indices_from_text(t.text, t.offset)
            if self.dim is not None and any(i >= self.dim for i in indices):
                raise UnknownBlade(f"{t.text} at offset {t.offset} is outside a {self.dim}-dimensional algebra")
            return Blade(indices, t.offset)
        if t.kind == "-":
            return Neg(self.expression(_UNARY_BP))
        if t.kind == "(":
            inner = self.expression(0)
            self.expect(")")
            return inner
        if t.kind == "ident" and self.token.kind == "(":
            return self.call(t)
        if t.kind == "ident":
            raise ParseError(f"unknown name {t.text!r}", t.offset, _PRIMARY_START)
        raise ParseError(f"unexpected {self._describe(t)}", t.offset, _PRIMARY_START)

    def call(self, name: Token) -> Call:
        if name.text not in FUNCTIONS:
            guess = process.extractOne(name.text, list(FUNCTIONS))
            hint = f"; did you mean {guess[0]!r}?" if guess and guess[1] >= 60 else ""
            raise ParseError(f"unknown function {name.text!r}{hint}", name.offset, frozenset(FUNCTIONS))
        self.expect("(")
        args = [self.expression(0)]
        while self.token.kind == ",":
            self.advance()
            args.append(self.expression(0))
        self.expect(")")
        arity = FUNCTIONS[name.text]
        if len(args) != arity:
            raise ParseError(f"{name.text} takes {arity} argument(s), got {len(args)}", name.offset)
        return Call(name.text, tuple(args), name.offset)


def parse(src: str, dim: Optional[int] = None) -> Expr:
    """Parses one expression; with `dim`, blade indices are range-checked."""
    return Parser(src, dim).parse()


# --- Evaluation ---
def evaluate(expr: Expr, algebra: CliffordAlgebra) -> Multivector:
    if isinstance(expr, Number):
        return algebra.scalar(parse_scalar(expr.text, algebra.mode))
    if isinstance(expr, Blade):
        return algebra.working_blade(expr.indices)
    if isinstance(expr, Neg):
        return -evaluate(expr.operand, algebra)
    if isinstance(expr, BinOp):
        left, right = evaluate(expr.left, algebra), evaluate(expr.right, algebra)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        if expr.op == "*":
            return left * right
        if expr.op == "^":
            return wedge(left, right)
        return structure.commutator(left, right)
    if isinstance(expr, Call):
        args = [evaluate(a, algebra) for a in expr.args]
        if expr.name == "inv":
            return structure.inverse(args[0])
        if expr.name == "gi":
            return grade_involution(args[0])
        if expr.name == "cmt":
            return structure.commutator(args[0], args[1])
        return grade_part(args[0], _grade_argument(args[1]))
    raise TypeError(f"not an expression node: {expr!r}")


def _grade_argument(k: Multivector) -> int:
    value = k.scalar_part()
    if k.grades() not in ([], [0]) or value != int(value):
        raise GradeOutOfRange(f"grade argument must be an integer scalar, got {k}")
    return int(value)


def evaluate_source(src: str, algebra: CliffordAlgebra) -> Multivector:
    return evaluate(parse(src, algebra.dim), algebra)
